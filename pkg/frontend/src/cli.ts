#!/usr/bin/env node
import { writeFileSync } from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { render, PlotSpec } from "./render.js";
import { loadRows } from "./rows.js";

function plot(kind: "errors" | "updates", argv: {
    in: string;
    out: string;
    epsilon?: number;
    groupBy: string;
}): void {
    if (!argv.out.endsWith(".svg")) {
        throw new Error(
            `unsupported output format for ${argv.out}: this renderer emits SVG ` +
            "(pass a .svg path; rasterize externally if PNG is needed)",
        );
    }
    const spec: PlotSpec = {
        value: kind === "errors" ? "final_error" : "updates",
        groupBy: argv.groupBy as PlotSpec["groupBy"],
        epsilon: argv.epsilon,
    };
    const { svg, warnings } = render(loadRows(argv.in), spec);
    for (const warning of warnings) {
        console.warn(`warning: ${warning}`);
    }
    writeFileSync(argv.out, svg);
    console.error(`wrote ${argv.out}`);
}

const common = {
    in: { type: "string" as const, demandOption: true, describe: "results CSV path" },
    out: { type: "string" as const, demandOption: true, describe: "output SVG path" },
    epsilon: { type: "number" as const, describe: "reference error threshold" },
    "group-by": {
        type: "string" as const,
        default: "delta",
        choices: ["delta", "schedule"],
        describe: "column splitting violins within a concept",
    },
};

yargs(hideBin(process.argv))
    .scriptName("plot")
    .command(
        "errors",
        "violins of final error per concept, with the epsilon reference line",
        common,
        (argv) => plot("errors", argv as never),
    )
    .command(
        "updates",
        "violins of update counts per concept",
        common,
        (argv) => plot("updates", argv as never),
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
        console.error(err ? `error: ${err.message}` : msg);
        process.exit(err ? 2 : 1);
    })
    .parse();
