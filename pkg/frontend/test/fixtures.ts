import { readFileSync } from "node:fs";

import type { ComparisonReportJson, MethodDescriptorJson } from "../src/types.js";

function load(name: string): unknown {
  // compiled tests run from dist-test/test/, fixtures stay in test/fixtures/
  const url = new URL(`../../test/fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8"));
}

export function multiplyReport(): ComparisonReportJson {
  return load("multiply-12x34.json") as ComparisonReportJson;
}

export function methodList(): MethodDescriptorJson[] {
  return load("methods.json") as MethodDescriptorJson[];
}
