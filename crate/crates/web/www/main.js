// SPDX-License-Identifier: MIT OR Apache-2.0
import init, { hci_explore, psei_explore, convolve } from "./pkg/conint_web.js";

const $ = (id) => document.getElementById(id);

function show(el, result, describe) {
  el.classList.toggle("err", !result.ok);
  el.textContent = result.ok ? describe(result) : result.error;
}

function frame(canvas, xs, ys) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const pad = 12;
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  const [y0, y1] = [Math.min(0, ...ys), Math.max(0, ...ys)];
  const sx = (x) => pad + ((x - x0) / (x1 - x0 || 1)) * (w - 2 * pad);
  const sy = (y) => h - pad - ((y - y0) / (y1 - y0 || 1)) * (h - 2 * pad);
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(sx(x0), sy(0));
  ctx.lineTo(sx(x1), sy(0));
  ctx.stroke();
  return { ctx, sx, sy };
}

function drawHci(result) {
  const pts = result.points;
  const { ctx, sx, sy } = frame($("hci-canvas"), pts.map((p) => p[0]), pts.map((p) => p[1]));
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  pts.forEach(([x, y], i) => (i ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
  ctx.stroke();
  if (result.best) {
    const a = pts[result.best.start - 1];
    const b = pts[result.best.end];
    ctx.strokeStyle = "#c33";
    ctx.lineWidth = 3;
    ctx.beginPath();
    for (let t = result.best.start - 1; t <= result.best.end; t++) {
      const [x, y] = pts[t];
      t === result.best.start - 1 ? ctx.moveTo(sx(x), sy(y)) : ctx.lineTo(sx(x), sy(y));
    }
    ctx.stroke();
    ctx.setLineDash([4, 4]);
    ctx.beginPath();
    ctx.moveTo(sx(a[0]), sy(a[1]));
    ctx.lineTo(sx(b[0]), sy(b[1]));
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.lineWidth = 1;
  }
}

function drawPsei(result) {
  const hits = result.hits;
  const xs = hits.map((_, i) => i);
  const { ctx, sx, sy } = frame($("psei-canvas"), [0, hits.length], hits);
  const bw = Math.max(1, sx(1) - sx(0) - 1);
  hits.forEach((h, i) => {
    const inside = result.best && i + 1 >= result.best.start && i + 1 <= result.best.end;
    ctx.fillStyle = inside ? "#c33" : "#999";
    ctx.fillRect(sx(xs[i]), Math.min(sy(h), sy(0)), bw, Math.abs(sy(h) - sy(0)));
  });
}

function runHci() {
  const result = JSON.parse(hci_explore($("hci-input").value, Number($("hci-lower").value)));
  show($("hci-out"), result, (r) =>
    r.best ? `interval [${r.best.start}, ${r.best.end}], confidence ${r.best.label}` : "no interval reaches the bound");
  if (result.ok) drawHci(result);
}

function runPsei() {
  const result = JSON.parse(psei_explore($("psei-input").value, Number($("psei-len").value)));
  show($("psei-out"), result, (r) =>
    `interval [${r.best.start}, ${r.best.end}], eccentricity ${r.best.label} (${r.case} maximum sum)`);
  if (result.ok) drawPsei(result);
}

function runConv() {
  const result = JSON.parse(convolve($("conv-x").value, $("conv-y").value));
  show($("conv-out"), result, (r) => "z = " + r.z.join(" "));
}

function randomLines(n, pair) {
  const r = (lo, hi) => lo + Math.floor(Math.random() * (hi - lo + 1));
  return Array.from({ length: n }, () => (pair ? `${r(-10, 10)},${r(1, 5)}` : `${r(-10, 8)}`)).join("\n");
}

await init();
$("hci-input").addEventListener("input", runHci);
$("hci-lower").addEventListener("input", runHci);
$("hci-random").addEventListener("click", () => { $("hci-input").value = randomLines(200, true); runHci(); });
$("psei-input").addEventListener("input", runPsei);
$("psei-len").addEventListener("input", runPsei);
$("psei-random").addEventListener("click", () => { $("psei-input").value = randomLines(300, false); runPsei(); });
$("conv-x").addEventListener("input", runConv);
$("conv-y").addEventListener("input", runConv);
runHci();
runPsei();
runConv();
