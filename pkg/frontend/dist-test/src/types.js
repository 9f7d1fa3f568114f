/** Wire-format types, mirroring the canonical trace JSON exactly. */
export {};
