/** Gaussian kernel density estimate used for violin outlines. */

export interface Density {
    /** Sample positions along the value axis. */
    x: number[];
    /** Density at each position (integrates to ~1 over the support). */
    d: number[];
}

function quantileSorted(sorted: number[], q: number): number {
    const pos = (sorted.length - 1) * q;
    const lo = Math.floor(pos);
    const hi = Math.ceil(pos);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo);
}

export function silvermanBandwidth(values: number[]): number {
    const n = values.length;
    const mean = values.reduce((a, b) => a + b, 0) / n;
    const sd = Math.sqrt(values.reduce((a, b) => a + (b - mean) ** 2, 0) / n);
    const sorted = [...values].sort((a, b) => a - b);
    const iqr = quantileSorted(sorted, 0.75) - quantileSorted(sorted, 0.25);
    const spread = Math.min(sd, iqr / 1.34) || sd;
    return 0.9 * spread * Math.pow(n, -0.2);
}

/**
 * Density of `values` evaluated on a regular grid spanning the data plus a
 * bandwidth margin. Returns null for degenerate (zero-spread) input; the
 * caller draws a flat marker instead.
 */
export function gaussianKde(values: number[], points = 64, bandwidth?: number): Density | null {
    if (values.length === 0) return null;
    const bw = bandwidth ?? silvermanBandwidth(values);
    if (!(bw > 0) || !Number.isFinite(bw)) return null;
    const lo = Math.min(...values) - 2.5 * bw;
    const hi = Math.max(...values) + 2.5 * bw;
    const step = (hi - lo) / (points - 1);
    const norm = 1 / (values.length * bw * Math.sqrt(2 * Math.PI));
    const x: number[] = [];
    const d: number[] = [];
    for (let i = 0; i < points; i++) {
        const xi = lo + i * step;
        let acc = 0;
        for (const v of values) {
            const z = (xi - v) / bw;
            acc += Math.exp(-0.5 * z * z);
        }
        x.push(xi);
        d.push(acc * norm);
    }
    return { x, d };
}

/** Trapezoid integral, used by tests to sanity-check normalization. */
export function integrate(density: Density): number {
    let acc = 0;
    for (let i = 1; i < density.x.length; i++) {
        acc += 0.5 * (density.d[i] + density.d[i - 1]) * (density.x[i] - density.x[i - 1]);
    }
    return acc;
}
