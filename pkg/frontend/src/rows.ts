import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** One tuning run, as written by the experiment harness CSV. */
export interface ResultRow {
    n: number;
    concept: string;
    epsilon: number;
    delta: number;
    schedule: string;
    rep: number;
    final_error: number;
    updates: number;
    sampling_phases: number;
    oracle_calls: number;
    terminated_ok: boolean;
}

export const REQUIRED_COLUMNS = [
    "n", "concept", "epsilon", "delta", "schedule", "rep",
    "final_error", "updates", "sampling_phases", "oracle_calls", "terminated_ok",
] as const;

const NUMERIC_COLUMNS = [
    "n", "epsilon", "delta", "rep", "final_error",
    "updates", "sampling_phases", "oracle_calls",
] as const;

export function parseRows(csvText: string): ResultRow[] {
    const parsed = Papa.parse<Record<string, string>>(csvText.trim(), {
        header: true,
        skipEmptyLines: true,
    });
    if (parsed.errors.length > 0) {
        const first = parsed.errors[0];
        throw new Error(`CSV parse error at row ${first.row}: ${first.message}`);
    }
    const header = parsed.meta.fields ?? [];
    const missing = REQUIRED_COLUMNS.filter((c) => !header.includes(c));
    if (missing.length > 0) {
        throw new Error(`CSV is missing required columns: ${missing.join(", ")}`);
    }
    return parsed.data.map((raw, i) => {
        const row: Record<string, unknown> = { ...raw };
        for (const col of NUMERIC_COLUMNS) {
            const value = Number(raw[col]);
            if (!Number.isFinite(value)) {
                throw new Error(`row ${i + 1}: column ${col} is not numeric: ${raw[col]}`);
            }
            row[col] = value;
        }
        row.terminated_ok = raw.terminated_ok === "true";
        return row as unknown as ResultRow;
    });
}

export function loadRows(path: string): ResultRow[] {
    return parseRows(readFileSync(path, "utf-8"));
}

/** Distinct values of a column, sorted numerically when possible. */
export function distinctValues(rows: ResultRow[], column: keyof ResultRow): string[] {
    const values = [...new Set(rows.map((r) => String(r[column])))];
    const numeric = values.every((v) => Number.isFinite(Number(v)));
    return numeric
        ? values.sort((a, b) => Number(a) - Number(b))
        : values.sort();
}
