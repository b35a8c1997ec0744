// Built by `wasm-pack build crates/web --target web --out-dir www/pkg`.
import init, { quandle_info, derivations, lie_algebra } from "./pkg/qderiv_web.js";

const $ = (id) => document.getElementById(id);
const out = $("out");

function source() {
  const t = $("table").value.trim();
  return t.length > 0 ? t : $("spec").value;
}

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function matrixText(m) {
  const cells = m.map((row) => row.map(String));
  const w = Math.max(...cells.flat().map((c) => c.length));
  return cells.map((row) => "[" + row.map((c) => c.padStart(w)).join(" ") + "]").join("\n");
}

function run(f) {
  out.replaceChildren();
  try {
    f(JSON.parse);
  } catch (e) {
    out.append(el("p", String(e), "err"));
  }
}

function showInfo(parse) {
  const v = parse(quandle_info(source()));
  const table = el("table");
  table.className = "cayley";
  v.quandle.table.forEach((row) => {
    const tr = el("tr");
    row.forEach((c) => tr.append(el("td", String(c))));
    table.append(tr);
  });
  out.append(el("h2", `Order ${v.quandle.n}`), table);
  const p = v.props;
  out.append(el("pre",
    `involutive ${p.involutive}\nlatin ${p.latin}\nmedial ${p.medial}\n` +
    `connected ${p.connected}\norbits ${JSON.stringify(p.orbits)}\ndihedral ${v.dihedral}`));
}

function showDerivations(parse) {
  const v = parse(derivations(source(), $("field").value));
  out.append(el("h2", `dim Der = ${v.dim} over ${v.field}`));
  v.basis.forEach((m, i) => out.append(el("h3", `D${i}`), el("pre", matrixText(m))));
}

function showLie(parse) {
  const v = parse(lie_algebra(source(), $("field").value));
  out.append(el("h2", `dim T(A) = ${v.dim}`));
  out.append(el("p", `inner derivations ${v.inner_dim}, outer ${v.outer_dim}`));
  out.append(el("pre", v.log.map((e) => `+ ${e.label.padEnd(12)} dim ${e.dim}`).join("\n")));
}

await init();
$("info").onclick = () => run(showInfo);
$("der").onclick = () => run(showDerivations);
$("lie").onclick = () => run(showLie);
