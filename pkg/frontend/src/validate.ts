// Client-side mirrors of the server's closed vocabularies and the parse
// string grammar, so bad input never leaves the browser.

export const PARTS_OF_SPEECH = [
  "V", "N", "A", "Adv", "Pron", "Prep", "D", "Conj",
] as const;

export const ATTRIBUTES = [
  "1SG", "2SG", "3SG", "1PL", "2PL", "3PL", "2ND", "3RD",
  "SG", "PL", "PROG", "PAST", "PPART", "INF", "PRES",
  "STR", "WK", "GEN", "NOM", "ACC", "NOMACC",
  "NEG", "PASSIVE", "to", "COMP", "SUPER",
  "MASC", "FEM", "NEUT", "WH", "REFL",
  "REF1SG", "REF2ND", "REF2SG", "REF2PL", "REF3SG", "REF3PL",
  "REFMASC", "REFFEM",
] as const;

export const CLASS_POS: Record<string, string> = {
  A_Root1: "A", A_Root2: "A",
  N_Root1: "N", N_Root2: "N",
  V_Root1: "V", V_Root2: "V", V_Root3: "V", V_Root4: "V",
  V_Root5: "V", V_Root6: "V", V_Root7: "V", V_Root8: "V",
  Pron: "Pron", Prep: "Prep", Det: "D", Conj: "Conj", Adv: "Adv",
};

export const CONTINUATION_CLASSES = Object.keys(CLASS_POS);

const POS_SET = new Set<string>(PARTS_OF_SPEECH);
const ATTR_SET = new Set<string>(ATTRIBUTES);

export interface ParsedParse {
  pos: string;
  root: string;
  attrs: string[];
}

export type ParseResult =
  | { ok: true; parse: ParsedParse }
  | { ok: false; error: string };

/** Grammar: POS '(' root ')' (' ' ATTR)* — same as the service. */
export function parseParseString(s: string): ParseResult {
  const open = s.indexOf("(");
  if (open < 0) return { ok: false, error: "missing '('" };
  const pos = s.slice(0, open);
  if (!POS_SET.has(pos)) return { ok: false, error: `unknown part of speech '${pos}'` };
  const close = s.indexOf(")", open);
  if (close < 0) return { ok: false, error: "missing ')'" };
  const root = s.slice(open + 1, close);
  if (!root) return { ok: false, error: "empty root" };
  const rest = s.slice(close + 1);
  let attrs: string[] = [];
  if (rest) {
    if (!rest.startsWith(" ")) return { ok: false, error: "junk after root" };
    attrs = rest.slice(1).split(" ");
    for (const a of attrs) {
      if (!ATTR_SET.has(a)) return { ok: false, error: `unknown attribute '${a}'` };
    }
    if (new Set(attrs).size !== attrs.length) {
      return { ok: false, error: "duplicate attribute" };
    }
  }
  return { ok: true, parse: { pos, root, attrs } };
}

export interface EntryInput {
  lexical: string;
  cls: string;
  parse: string;
}

/** Field name -> message; empty object means the entry is valid. */
export function validateEntry(input: EntryInput): Record<string, string> {
  const errors: Record<string, string> = {};
  if (!input.lexical) {
    errors.lexical = "lexical form is required";
  } else if (input.lexical.includes("+") || /\s/.test(input.lexical)) {
    errors.lexical = "lexical form must be a single word without '+'";
  }
  const pos = CLASS_POS[input.cls];
  if (pos === undefined) {
    errors.cls = `unknown continuation class '${input.cls}'`;
  }
  const parsed = parseParseString(input.parse);
  if (!parsed.ok) {
    errors.parse = parsed.error;
  } else if (pos !== undefined && parsed.parse.pos !== pos) {
    errors.parse = `class ${input.cls} requires part of speech ${pos}`;
  }
  return errors;
}
