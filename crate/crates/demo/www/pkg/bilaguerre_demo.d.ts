/* tslint:disable */
/* eslint-disable */

/**
 * The main congruence at every `(p, q)` in `[1, max_p] x [1, max_q]`.
 */
export function congruence_grid(n: number, m: number, max_p: number, max_q: number): string;

/**
 * `L_{n,m}` with a grid of its values over `[0, SPAN]^2`.
 */
export function field(n: number, m: number): string;

/**
 * Coefficients of the rook transform of `L_{n,m}` beside the rook numbers
 * of the `n x n` and `m x m` boards.
 */
export function rook_grid(n: number, m: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly congruence_grid: (a: number, b: number, c: number, d: number) => [number, number];
    readonly field: (a: number, b: number) => [number, number];
    readonly rook_grid: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
