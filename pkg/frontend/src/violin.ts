import { gaussianKde } from "./kde.js";
import { fmt, LinearScale } from "./scale.js";

/**
 * Mirrored-density outline for one group of values, as an SVG path.
 *
 * Zero-spread groups (every run identical) degenerate to a flat lens at the
 * common value rather than crashing the density estimate.
 */
export function violinPath(
    values: number[],
    centerX: number,
    maxHalfWidth: number,
    yScale: LinearScale,
): string {
    const density = gaussianKde(values);
    if (density === null) {
        const y = yScale(values[0]);
        const left = centerX - maxHalfWidth;
        const right = centerX + maxHalfWidth;
        return `M ${fmt(left)} ${fmt(y)} L ${fmt(centerX)} ${fmt(y - 1.5)} ` +
            `L ${fmt(right)} ${fmt(y)} L ${fmt(centerX)} ${fmt(y + 1.5)} Z`;
    }
    const peak = Math.max(...density.d);
    const right: string[] = [];
    const left: string[] = [];
    for (let i = 0; i < density.x.length; i++) {
        const y = fmt(yScale(density.x[i]));
        const halfWidth = (density.d[i] / peak) * maxHalfWidth;
        right.push(`${fmt(centerX + halfWidth)} ${y}`);
        left.unshift(`${fmt(centerX - halfWidth)} ${y}`);
    }
    return `M ${right[0]} L ${right.slice(1).join(" L ")} L ${left.join(" L ")} Z`;
}

/** Median tick drawn across a violin. */
export function medianLine(
    values: number[],
    centerX: number,
    halfWidth: number,
    yScale: LinearScale,
): string {
    const sorted = [...values].sort((a, b) => a - b);
    const mid = sorted.length >> 1;
    const median = sorted.length % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;
    const y = fmt(yScale(median));
    return `M ${fmt(centerX - halfWidth * 0.6)} ${y} L ${fmt(centerX + halfWidth * 0.6)} ${y}`;
}
