import { distinctValues, ResultRow } from "./rows.js";
import { fmt, linearScale, ticks } from "./scale.js";
import { medianLine, violinPath } from "./violin.js";

export interface PlotSpec {
    /** Column plotted on the y axis. */
    value: "final_error" | "updates";
    /** Column that splits violins within a concept slot (delta or schedule). */
    groupBy: "delta" | "schedule";
    /** Reference threshold; drawn as the red line on final-error plots. */
    epsilon?: number;
    width?: number;
    height?: number;
}

export interface Rendered {
    svg: string;
    warnings: string[];
}

const PALETTE = ["#4c72b0", "#dd8452", "#55a868", "#8172b3", "#937860", "#64b5cd"];
const MARGIN = { top: 40, right: 18, bottom: 52, left: 62 };
const EPSILON_COLOR = "red";

function esc(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/**
 * Violin chart of one run column, one x slot per concept, one violin per
 * group value inside each slot.  When the rows span several schedules and
 * the grouping is not by schedule, each schedule gets its own panel side by
 * side (the two-schedule comparison layout).
 */
export function render(rows: ResultRow[], spec: PlotSpec): Rendered {
    if (rows.length === 0) {
        throw new Error("no rows to plot");
    }
    if (spec.value === "final_error" && spec.epsilon === undefined) {
        throw new Error("final_error plots need an epsilon reference value");
    }
    const warnings: string[] = [];
    const schedules = distinctValues(rows, "schedule");
    const panelled = spec.groupBy !== "schedule" && schedules.length > 1;
    const panels = panelled ? schedules : [null];

    const groups = distinctValues(rows, spec.groupBy);
    const conceptCount = distinctValues(rows, "concept").length;
    const panelWidth =
        spec.width ??
        MARGIN.left + MARGIN.right + Math.max(380, 30 * conceptCount * groups.length);
    const height = spec.height ?? 360;
    const body: string[] = [];
    for (let p = 0; p < panels.length; p++) {
        const panelRows = panels[p] === null ? rows : rows.filter((r) => r.schedule === panels[p]);
        const title = panels[p] === null ? "" : `schedule = ${panels[p]}`;
        body.push(
            `<g class="panel" transform="translate(${p * panelWidth},0)">` +
            renderPanel(panelRows, spec, groups, panelWidth, height, title, warnings, p) +
            "</g>",
        );
    }
    const totalWidth = panelWidth * panels.length;
    const svg =
        `<svg xmlns="http://www.w3.org/2000/svg" width="${totalWidth}" height="${height}" ` +
        `viewBox="0 0 ${totalWidth} ${height}" font-family="sans-serif" font-size="11">\n` +
        `<rect width="${totalWidth}" height="${height}" fill="white"/>\n` +
        body.join("\n") +
        "\n</svg>\n";
    return { svg, warnings };
}

function renderPanel(
    rows: ResultRow[],
    spec: PlotSpec,
    groups: string[],
    width: number,
    height: number,
    title: string,
    warnings: string[],
    panelIndex: number,
): string {
    const plotW = width - MARGIN.left - MARGIN.right;
    const plotH = height - MARGIN.top - MARGIN.bottom;
    const concepts = distinctValues(rows, "concept");
    const clipId = `plot-area-${panelIndex}`;

    const values = rows.map((r) => r[spec.value]);
    let yMax = Math.max(...values);
    if (spec.value === "final_error" && spec.epsilon !== undefined) {
        yMax = Math.max(yMax, spec.epsilon * 1.25);
    }
    if (yMax <= 0) yMax = 1;
    const y = linearScale([0, yMax * 1.08], [MARGIN.top + plotH, MARGIN.top]);

    const out: string[] = [
        `<defs><clipPath id="${clipId}"><rect x="${MARGIN.left}" y="${MARGIN.top}" ` +
        `width="${fmt(plotW)}" height="${fmt(plotH)}"/></clipPath></defs>`,
    ];

    // y grid + ticks
    for (const tick of ticks(0, yMax * 1.08)) {
        const py = fmt(y(tick));
        out.push(
            `<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + plotW}" y2="${py}" ` +
            `stroke="#e0e0e0" stroke-width="1"/>`,
            `<text x="${MARGIN.left - 6}" y="${py}" text-anchor="end" dominant-baseline="middle">` +
            `${fmt(tick, 6)}</text>`,
        );
    }

    // violins per (concept slot, group), clipped to the plot area
    out.push(`<g clip-path="url(#${clipId})">`);
    const slotW = plotW / concepts.length;
    const violinHalf = Math.min(0.42 * (slotW / groups.length), 34);
    for (let ci = 0; ci < concepts.length; ci++) {
        for (let gi = 0; gi < groups.length; gi++) {
            const subset = rows.filter(
                (r) => r.concept === concepts[ci] && String(r[spec.groupBy]) === groups[gi],
            );
            const cx = MARGIN.left + slotW * ci + (slotW * (gi + 0.5)) / groups.length;
            if (subset.length < 2) {
                warnings.push(
                    `skipping ${spec.groupBy}=${groups[gi]} for concept ${concepts[ci]}: ` +
                    `${subset.length} run(s)`,
                );
                continue;
            }
            const groupValues = subset.map((r) => r[spec.value]);
            const color = PALETTE[gi % PALETTE.length];
            out.push(
                `<path class="violin" d="${violinPath(groupValues, cx, violinHalf, y)}" ` +
                `fill="${color}" fill-opacity="0.55" stroke="${color}" stroke-width="1"/>`,
                `<path d="${medianLine(groupValues, cx, violinHalf, y)}" ` +
                `stroke="#333333" stroke-width="1.2"/>`,
            );
        }
    }
    out.push("</g>");

    // concept labels below the axis
    for (let ci = 0; ci < concepts.length; ci++) {
        const lx = fmt(MARGIN.left + slotW * (ci + 0.5));
        out.push(
            `<text x="${lx}" y="${MARGIN.top + plotH + 16}" text-anchor="middle">` +
            `${esc(concepts[ci])}</text>`,
        );
    }

    // epsilon reference line on error plots
    if (spec.value === "final_error" && spec.epsilon !== undefined) {
        const py = fmt(y(spec.epsilon));
        out.push(
            `<line class="epsilon" x1="${MARGIN.left}" y1="${py}" ` +
            `x2="${MARGIN.left + plotW}" y2="${py}" stroke="${EPSILON_COLOR}" ` +
            `stroke-width="1.5"/>`,
            `<text x="${MARGIN.left + plotW - 4}" y="${fmt(Number(py) - 4)}" ` +
            `text-anchor="end" fill="${EPSILON_COLOR}">&#949; = ${fmt(spec.epsilon, 6)}</text>`,
        );
    }

    // frame, axis titles, legend, panel title
    out.push(
        `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${fmt(plotW)}" height="${fmt(plotH)}" ` +
        `fill="none" stroke="#666666"/>`,
        `<text x="${fmt(MARGIN.left + plotW / 2)}" y="${height - 12}" text-anchor="middle">` +
        `concept</text>`,
        `<text transform="translate(14,${fmt(MARGIN.top + plotH / 2)}) rotate(-90)" ` +
        `text-anchor="middle">${esc(spec.value)}</text>`,
    );
    for (let gi = 0; gi < groups.length; gi++) {
        const lx = MARGIN.left + 8 + gi * 96;
        const color = PALETTE[gi % PALETTE.length];
        out.push(
            `<rect x="${lx}" y="${MARGIN.top - 22}" width="10" height="10" fill="${color}" ` +
            `fill-opacity="0.55" stroke="${color}"/>`,
            `<text x="${lx + 14}" y="${MARGIN.top - 13}">${esc(spec.groupBy)} = ` +
            `${esc(groups[gi])}</text>`,
        );
    }
    if (title) {
        out.push(
            `<text x="${fmt(MARGIN.left + plotW / 2)}" y="16" text-anchor="middle" ` +
            `font-weight="bold">${esc(title)}</text>`,
        );
    }
    return out.join("\n");
}
