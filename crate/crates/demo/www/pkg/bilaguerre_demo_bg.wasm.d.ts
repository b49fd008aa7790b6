/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const congruence_grid: (a: number, b: number, c: number, d: number) => [number, number];
export const field: (a: number, b: number) => [number, number];
export const rook_grid: (a: number, b: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
