/** Linear scales and nice tick positions for hand-assembled SVG axes. */

export interface LinearScale {
    (value: number): number;
    domain: [number, number];
    range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
    const [d0, d1] = domain;
    const [r0, r1] = range;
    const span = d1 - d0 || 1;
    const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
    scale.domain = domain;
    scale.range = range;
    return scale;
}

/** Round tick positions covering [lo, hi] with a 1/2/5 step. */
export function ticks(lo: number, hi: number, count = 6): number[] {
    if (lo === hi) return [lo];
    const rawStep = (hi - lo) / Math.max(1, count);
    const power = Math.floor(Math.log10(rawStep));
    const base = Math.pow(10, power);
    const candidates = [1, 2, 5, 10].map((m) => m * base);
    const step = candidates.find((s) => s >= rawStep) ?? candidates[3];
    const start = Math.ceil(lo / step) * step;
    const out: number[] = [];
    for (let v = start; v <= hi + step * 1e-9; v += step) {
        out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
}

/** Deterministic short formatting for tick labels and path coordinates. */
export function fmt(value: number, digits = 4): string {
    const rounded = Number(value.toFixed(digits));
    return String(rounded);
}
