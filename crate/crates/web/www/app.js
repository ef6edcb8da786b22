import init, { synthesize, layout, simulate, example } from "./pkg/bnpin_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
const RADIUS = 14;
let plan = null;

function status(text, error = false) {
  $("status").textContent = text;
  $("status").className = error ? "error" : "";
}

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  parent.appendChild(node);
  return node;
}

function drawGraph() {
  const view = JSON.parse(layout($("model").value, $("target").value));
  const svg = $("graph");
  svg.replaceChildren();
  svg.setAttribute("width", view.width);
  svg.setAttribute("height", view.height);
  const defs = el("defs", {}, svg);
  const marker = el("marker", { id: "tip", viewBox: "0 0 10 10", refX: 10, refY: 5, markerWidth: 6, markerHeight: 6, orient: "auto" }, defs);
  el("path", { d: "M0,0 L10,5 L0,10 z", fill: "#555" }, marker);

  const pos = new Map(view.nodes.map((n) => [n.id, n]));
  const removed = new Set((plan?.removed_arcs ?? []).map(([t, h]) => `${t}-${h}`));
  const pinned = new Set(plan?.pinned ?? []);
  const arcs = view.arcs.map((a) => [a.tail, a.head]);
  for (const key of removed) {
    const [t, h] = key.split("-").map(Number);
    if (!arcs.some(([a, b]) => a === t && b === h)) arcs.push([t, h]);
  }
  for (const [t, h] of arcs) {
    const a = pos.get(t), b = pos.get(h);
    const cut = removed.has(`${t}-${h}`);
    const style = { stroke: cut ? "#c00" : "#555", fill: "none", "marker-end": "url(#tip)" };
    if (cut) style["stroke-dasharray"] = "4 3";
    if (t === h) {
      el("path", { ...style, d: `M${a.x - 6},${a.y - RADIUS} C${a.x - 20},${a.y - 40} ${a.x + 20},${a.y - 40} ${a.x + 6},${a.y - RADIUS}` }, svg);
      continue;
    }
    const dx = b.x - a.x, dy = b.y - a.y, len = Math.hypot(dx, dy);
    const ux = dx / len, uy = dy / len;
    el("line", { ...style, x1: a.x + ux * RADIUS, y1: a.y + uy * RADIUS, x2: b.x - ux * RADIUS, y2: b.y - uy * RADIUS }, svg);
  }
  for (const n of view.nodes) {
    const g = el("g", {}, svg);
    const title = el("title", {}, g);
    title.textContent = `${n.id}: ${n.name}`;
    el("circle", { cx: n.x, cy: n.y, r: RADIUS, fill: n.fixed ? "#ccc" : "#fff", stroke: "#333" }, g);
    if (pinned.has(n.id)) el("circle", { cx: n.x, cy: n.y, r: RADIUS - 4, fill: "none", stroke: "#333" }, g);
    const label = el("text", { x: n.x, y: n.y + RADIUS + 11, "text-anchor": "middle" }, g);
    label.textContent = n.name;
  }
}

function drawPlan(result) {
  const rows = result.plan.controllers.map((c) =>
    `<tr><td>${c.node} ${c.name}</td><td>${c.part}</td><td>${c.coupling}</td><td>${c.feedback}</td><td>${c.target_matrix}</td><td>${c.controlled_rule}</td></tr>`);
  $("plan").innerHTML =
    `<h3>Controllers</h3><table><tr><th>node</th><th>part</th><th>coupling</th><th>feedback</th><th>target</th><th>controlled rule</th></tr>${rows.join("")}</table>`;
}

function drawRaster(canvas, raster) {
  const scale = 6, margin = 3;
  const n = raster.states[0].length;
  canvas.width = (n + margin) * scale;
  canvas.height = raster.states.length * scale;
  const ctx = canvas.getContext("2d");
  ctx.fillStyle = "#fff";
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  raster.states.forEach((s, t) => {
    ctx.fillStyle = raster.inside[t] ? "#2a2" : "#eee";
    ctx.fillRect(0, t * scale, (margin - 1) * scale, scale);
    ctx.fillStyle = "#000";
    for (let k = 0; k < n; k++) {
      if (s[k] === "1") ctx.fillRect((k + margin) * scale, t * scale, scale - 1, scale - 1);
    }
  });
}

function run(action) {
  try {
    action();
  } catch (e) {
    status(e.message ?? String(e), true);
  }
}

function onSynthesize() {
  const tau = $("tau").value.trim();
  const result = JSON.parse(synthesize($("model").value, $("target").value, tau === "" ? undefined : Number(tau)));
  plan = result.plan;
  plan.controlled_model = result.controlled_model;
  drawGraph();
  drawPlan(result);
  status(`Pinned ${plan.pinned.join(", ") || "none"}. ` +
    `Verification (${result.mode}): ${result.verified ? "pass" : "FAIL"}, ` +
    `observed stabilizing time ${result.tau_star}` +
    (result.diameter_bound == null ? "" : `, bound ${result.diameter_bound}`));
  onSimulate();
}

function onSimulate() {
  const seed = Math.floor(Math.random() * 2 ** 31);
  const initial = $("initial").value;
  const open = JSON.parse(simulate($("model").value, $("target").value, initial, 30, seed));
  drawRaster($("open"), open);
  if (plan?.controlled_model) {
    const closed = JSON.parse(simulate(plan.controlled_model, $("target").value, open.states[0], 30, seed));
    drawRaster($("closed"), closed);
  }
}

function loadExample() {
  const ex = JSON.parse(example());
  $("model").value = ex.model;
  $("target").value = ex.target;
  $("tau").value = "";
  plan = null;
  $("plan").replaceChildren();
  drawGraph();
  status("Example loaded.");
}

await init();
$("synthesize").onclick = () => run(onSynthesize);
$("simulate").onclick = () => run(onSimulate);
$("example").onclick = () => run(loadExample);
$("model").oninput = () => { plan = null; };
run(loadExample);
