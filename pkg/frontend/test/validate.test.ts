import { describe, expect, it } from "vitest";

import {
  ATTRIBUTES,
  CONTINUATION_CLASSES,
  parseParseString,
  validateEntry,
} from "../src/validate.js";

describe("parseParseString", () => {
  it("accepts transcript-style parse strings", () => {
    expect(parseParseString("V(teach) PAST STR")).toEqual({
      ok: true,
      parse: { pos: "V", root: "teach", attrs: ["PAST", "STR"] },
    });
    expect(parseParseString("A(funky)")).toEqual({
      ok: true,
      parse: { pos: "A", root: "funky", attrs: [] },
    });
    expect(parseParseString("Pron(herself) REFL FEM 3SG").ok).toBe(true);
  });

  it("rejects malformed strings with a reason", () => {
    expect(parseParseString("X(foo)")).toMatchObject({ ok: false });
    expect(parseParseString("N")).toMatchObject({ ok: false, error: "missing '('" });
    expect(parseParseString("N()")).toMatchObject({ ok: false, error: "empty root" });
    expect(parseParseString("N(x) ZZ").ok).toBe(false);
    expect(parseParseString("N(x) PL PL").ok).toBe(false);
    expect(parseParseString("N(x)PL").ok).toBe(false);
  });

  it("accepts every attribute tag", () => {
    for (const attr of ATTRIBUTES) {
      expect(parseParseString(`N(x) ${attr}`).ok).toBe(true);
    }
  });
});

describe("validateEntry", () => {
  it("accepts a well-formed entry", () => {
    expect(validateEntry({ lexical: "grok", cls: "V_Root8", parse: "V(grok)" }))
      .toEqual({});
  });

  it("rejects an unknown class without touching the network", () => {
    const errors = validateEntry({ lexical: "x", cls: "V_Root9", parse: "V(x)" });
    expect(errors.cls).toContain("V_Root9");
  });

  it("rejects class/POS mismatches", () => {
    const errors = validateEntry({ lexical: "x", cls: "V_Root1", parse: "N(x)" });
    expect(errors.parse).toContain("part of speech V");
  });

  it("rejects bad lexical forms", () => {
    expect(validateEntry({ lexical: "", cls: "Adv", parse: "Adv(x)" }).lexical)
      .toBeTruthy();
    expect(validateEntry({ lexical: "a+b", cls: "Adv", parse: "Adv(x)" }).lexical)
      .toBeTruthy();
    expect(validateEntry({ lexical: "two words", cls: "Adv", parse: "Adv(x)" })
      .lexical).toBeTruthy();
  });

  it("exposes the full closed class list for the select control", () => {
    expect(CONTINUATION_CLASSES).toHaveLength(17);
    expect(CONTINUATION_CLASSES).toContain("Det");
  });
});
