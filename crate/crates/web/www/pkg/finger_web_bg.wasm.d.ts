/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const default_lengths: () => [number, number];
export const force_svg: (a: number) => [number, number, number, number];
export const grasp_summary: (a: number, b: number) => [number, number, number, number];
export const joint_angle_svg: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const max_tension: () => number;
export const tip_trace_svg: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
