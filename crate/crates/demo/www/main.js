import init, { gf4_check, two_qubit_example, simulate } from "./pkg/qldpc_demo.js";

const DECODERS = ["gf2", "gf4", "supernode", "adjusted", "efb-gf4", "efb-supernode", "perturb-gf4",
  "perturb-supernode", "aug-gf2", "aug-gf4", "aug-supernode", "combined"];
const SYMBOLS = { "1": 1, "w": 2, "W": 3 };
const $ = (id) => document.getElementById(id);

function table(el, header, rows) {
  el.innerHTML = "<tr>" + header.map((h) => `<th>${h}</th>`).join("") + "</tr>" +
    rows.map((r) => "<tr>" + r.map((c) => `<td>${typeof c === "number" ? c.toFixed(4) : c}</td>`).join("") + "</tr>").join("");
}

function runCheck() {
  const lines = $("chk-in").value.trim().split("\n").map((l) => l.trim().split(/\s+/));
  const coeffs = new Uint8Array(lines.map((l) => SYMBOLS[l[0]] ?? 1));
  const probs = new Float64Array(lines.flatMap((l) => l.slice(1, 5).map(Number)));
  try {
    const out = gf4_check(probs, coeffs, Number($("chk-z").value));
    const rows = lines.map((l, k) => [l[0], ...out.slice(4 * k, 4 * k + 4)]);
    table($("chk-out"), ["coeff", "I", "X", "Z", "Y"], rows);
  } catch (e) {
    $("chk-out").innerHTML = `<tr><td>${e}</td></tr>`;
  }
}

function runTwoQubit() {
  const v = two_qubit_example(Number($("tq-p").value));
  table($("tq-out"), ["qubit", "I", "X", "Z", "Y"], [[1, ...v.slice(0, 4)], [2, ...v.slice(4, 8)]]);
  const outcome = ["success", "detected error", "undetected error"][v[8]];
  $("tq-bp").textContent = `GF(4) BP: ${outcome} after ${v[9]} iterations`;
}

function runSim() {
  const dec = $("sim-dec").value;
  $("sim-out").textContent = "running…";
  setTimeout(() => {
    try {
      const t0 = performance.now();
      const [trials, det, und, fer, it, att] = simulate(dec, Number($("sim-p").value), Number($("sim-t").value),
        Number($("sim-n").value), Number($("sim-d").value), BigInt(1));
      const s = ((performance.now() - t0) / 1000).toFixed(1);
      $("sim-out").textContent =
        `${dec}: ${trials} trials, ${det} detected, ${und} undetected\nFER ${fer.toExponential(3)}, ` +
        `${it.toFixed(1)} iterations, ${att.toFixed(2)} attempts per trial (${s} s)`;
    } catch (e) {
      $("sim-out").textContent = String(e);
    }
  }, 10);
}

await init();
for (const d of DECODERS) $("sim-dec").add(new Option(d, d));
$("sim-dec").value = "aug-gf4";
$("chk-run").onclick = runCheck;
$("tq-run").onclick = runTwoQubit;
$("sim-run").onclick = runSim;
runCheck();
runTwoQubit();
