import { readFileSync } from "node:fs";
function load(name) {
    // compiled tests run from dist-test/test/, fixtures stay in test/fixtures/
    const url = new URL(`../../test/fixtures/${name}`, import.meta.url);
    return JSON.parse(readFileSync(url, "utf-8"));
}
export function multiplyReport() {
    return load("multiply-12x34.json");
}
export function methodList() {
    return load("methods.json");
}
