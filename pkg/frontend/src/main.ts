import {
  addEntry,
  AnalysisJson,
  ApiError,
  deleteEntry,
  EntryJson,
  listEntries,
  lookup,
} from "./api.js";
import { debounce, LatestOnly } from "./flow.js";
import { CONTINUATION_CLASSES, validateEntry } from "./validate.js";

const NONE = "*** NONE ***";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function banner(): HTMLElement {
  const node = el("div", "banner");
  node.hidden = true;
  return node;
}

function showBanner(node: HTMLElement, message: string | null): void {
  node.hidden = message === null;
  node.textContent = message ?? "";
}

function analysisTable(analyses: AnalysisJson[]): HTMLTableElement {
  const table = el("table", "analyses");
  const head = table.createTHead().insertRow();
  for (const col of ["surface", "root", "POS", "attributes"]) {
    head.appendChild(el("th", undefined, col));
  }
  const body = table.createTBody();
  if (analyses.length === 0) {
    const row = body.insertRow();
    const cell = row.insertCell();
    cell.colSpan = 4;
    cell.textContent = NONE;
    row.className = "none";
    return table;
  }
  for (const a of analyses) {
    const row = body.insertRow();
    row.insertCell().textContent = a.lexical_form;
    row.insertCell().textContent = a.root;
    row.insertCell().textContent = a.pos;
    row.insertCell().textContent = a.attrs.join(" ");
  }
  return table;
}

// ---------------------------------------------------------------- lookup

function lookupPanel(): { root: HTMLElement; refresh: () => void } {
  const root = el("section", "panel");
  root.appendChild(el("h2", undefined, "Lookup"));
  const errors = banner();
  const input = el("input");
  input.placeholder = "type a word…";
  input.id = "lookup-word";
  const results = el("div", "results");
  root.append(input, errors, results);

  const latest = new LatestOnly();

  async function run(): Promise<void> {
    const word = input.value.trim();
    if (!word) {
      results.replaceChildren();
      showBanner(errors, null);
      return;
    }
    try {
      const response = await latest.track(lookup(word));
      if (response === null) return; // superseded by a newer query
      showBanner(errors, null);
      results.replaceChildren(analysisTable(response.analyses));
    } catch (err) {
      showBanner(errors, `lookup failed: ${(err as Error).message}`);
    }
  }

  input.addEventListener("input", debounce(run, 200));
  return { root, refresh: run };
}

// ---------------------------------------------------------------- browse

function browsePanel(): { root: HTMLElement; refresh: () => void } {
  const root = el("section", "panel");
  root.appendChild(el("h2", undefined, "Entries"));
  const errors = banner();
  const prefix = el("input");
  prefix.placeholder = "prefix filter";
  prefix.id = "browse-prefix";
  const list = el("div", "results");
  root.append(prefix, errors, list);

  const latest = new LatestOnly();

  async function run(): Promise<void> {
    try {
      const page = await latest.track(listEntries(prefix.value.trim()));
      if (page === null) return;
      showBanner(errors, null);
      const table = el("table", "entries");
      const head = table.createTHead().insertRow();
      for (const col of ["lexical", "class", "parse", ""]) {
        head.appendChild(el("th", undefined, col));
      }
      const body = table.createTBody();
      for (const entry of page.entries) {
        const row = body.insertRow();
        row.insertCell().textContent = entry.lexical;
        row.insertCell().textContent = entry.class;
        row.insertCell().textContent = entry.parse;
        const remove = el("button", undefined, "delete");
        remove.addEventListener("click", () => void removeEntry(entry));
        row.insertCell().appendChild(remove);
      }
      const count = el("p", "count",
        `${page.total} matching entries (showing ${page.entries.length})`);
      list.replaceChildren(count, table);
    } catch (err) {
      showBanner(errors, `browse failed: ${(err as Error).message}`);
    }
  }

  async function removeEntry(entry: EntryJson): Promise<void> {
    try {
      await deleteEntry(entry);
      showBanner(errors, null);
      await run();
      app.refreshLookup();
    } catch (err) {
      showBanner(errors, `delete failed: ${(err as Error).message}`);
    }
  }

  prefix.addEventListener("input", debounce(run, 200));
  return { root, refresh: run };
}

// ---------------------------------------------------------------- editor

function editorPanel(): HTMLElement {
  const root = el("section", "panel");
  root.appendChild(el("h2", undefined, "Add entry"));
  const form = el("form");
  const fields: Record<string, HTMLElement> = {};

  function field(name: string, control: HTMLElement): HTMLElement {
    const wrap = el("div", "field");
    const label = el("label", undefined, name);
    const error = el("span", "field-error");
    error.hidden = true;
    fields[name] = error;
    wrap.append(label, control, error);
    return wrap;
  }

  const lexical = el("input");
  lexical.id = "entry-lexical";
  const cls = el("select");
  cls.id = "entry-class";
  for (const name of CONTINUATION_CLASSES) {
    const option = el("option", undefined, name);
    option.value = name;
    cls.appendChild(option);
  }
  const parse = el("input");
  parse.id = "entry-parse";
  parse.placeholder = 'e.g. V(grok)';
  const submit = el("button", undefined, "add");
  submit.type = "submit";
  const status = banner();

  form.append(
    field("lexical", lexical),
    field("class", cls),
    field("parse", parse),
    submit,
    status,
  );
  root.appendChild(form);

  function showFieldErrors(errors: Record<string, string>): void {
    for (const [name, node] of Object.entries(fields)) {
      const message = errors[name];
      node.hidden = message === undefined;
      node.textContent = message ?? "";
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submitEntry();
  });

  async function submitEntry(): Promise<void> {
    const input = {
      lexical: lexical.value.trim(),
      cls: cls.value,
      parse: parse.value.trim(),
    };
    const errors = validateEntry(input);
    showFieldErrors(errors);
    if (Object.keys(errors).length > 0) return; // no request sent
    try {
      await addEntry({ lexical: input.lexical, class: input.cls, parse: input.parse });
      showBanner(status, null);
      form.reset();
      app.refreshAll();
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        showFieldErrors({ parse: err.message });
      } else {
        showBanner(status, `add failed: ${(err as Error).message}`);
      }
    }
  }

  return root;
}

// ---------------------------------------------------------------- app

const app = {
  refreshLookup: () => { /* bound in install */ },
  refreshAll: () => { /* bound in install */ },
};

function install(): void {
  const mount = document.querySelector("#app");
  if (!mount) throw new Error("missing #app mount point");
  const title = el("h1", undefined, "Morphological lexicon maintenance");
  const lookupUi = lookupPanel();
  const browseUi = browsePanel();
  app.refreshLookup = () => void lookupUi.refresh();
  app.refreshAll = () => {
    void lookupUi.refresh();
    void browseUi.refresh();
  };
  mount.append(title, lookupUi.root, editorPanel(), browseUi.root);
  void browseUi.refresh();
}

install();
