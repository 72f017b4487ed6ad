/* tslint:disable */
/* eslint-disable */

/**
 * Outgoing messages of one trace check. `incoming` holds four
 * probabilities per edge in order (I, X, Z, Y); `coeffs` holds symbol
 * codes 1, 2, 3 for 1, ω, ω̄. Returns the flattened outgoing messages.
 */
export function gf4_check(incoming: Float64Array, coeffs: Uint8Array, syndrome: number): Float64Array;

/**
 * Runs `trials` trials of `decoder` on a [[120, 60]] bicycle code under
 * depolarizing noise. Returns (trials, detected, undetected, fer,
 * avg_iterations, avg_attempts).
 */
export function simulate(decoder: string, p: number, trials: number, attempts: number, delta: number, seed: bigint): Float64Array;

/**
 * Two-qubit code {XX, ZZ} under depolarizing noise `p` with error IX.
 * Returns exact posterior marginals of both qubits (8 numbers, order
 * I, X, Z, Y), then the BP outcome code (0 success, 1 detected,
 * 2 undetected) and BP's iteration count.
 */
export function two_qubit_example(p: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly gf4_check: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly simulate: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number, number];
    readonly two_qubit_example: (a: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
