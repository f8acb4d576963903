/* tslint:disable */
/* eslint-disable */

/**
 * Link lengths of the built-in configuration, for form defaults.
 */
export function default_lengths(): Float64Array;

/**
 * Single- and double-tendon force curves at `tension_n`.
 */
export function force_svg(tension_n: number): string;

/**
 * One-line grasp verdict for a cylinder of `diameter_mm` at `tension_n`.
 */
export function grasp_summary(diameter_mm: number, tension_n: number): string;

/**
 * Joint-angle plot for edited link lengths `v1..v8` (mm) and offsets (deg).
 */
export function joint_angle_svg(lengths: Float64Array, sigma_deg: number, rho_deg: number): string;

/**
 * Tension limit of the built-in tendon (N).
 */
export function max_tension(): number;

/**
 * Fingertip trace for edited link lengths at gripper orientation `psi_deg`.
 */
export function tip_trace_svg(lengths: Float64Array, sigma_deg: number, rho_deg: number, psi_deg: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly default_lengths: () => [number, number];
    readonly force_svg: (a: number) => [number, number, number, number];
    readonly grasp_summary: (a: number, b: number) => [number, number, number, number];
    readonly joint_angle_svg: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly max_tension: () => number;
    readonly tip_trace_svg: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
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
