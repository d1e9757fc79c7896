/** Deterministic force-directed placement.
 *
 * Runs a fixed number of repulsion + spring + centering steps from
 * seed-derived start positions, so one query always yields one picture.
 */

export interface Point {
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  seed: number;
  iterations?: number;
}

/** mulberry32: tiny deterministic PRNG, good enough for jitter. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** FNV-1a hash for deriving a layout seed from the query description. */
export function hashString(text: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193);
  }
  return hash >>> 0;
}

export function forceLayout(
  ids: string[],
  edges: [string, string][],
  options: LayoutOptions,
): Map<string, Point> {
  const { width, height, seed } = options;
  const iterations = options.iterations ?? 150;
  const rand = mulberry32(seed);
  const index = new Map(ids.map((id, i) => [id, i]));
  const xs = ids.map(() => width * (0.2 + 0.6 * rand()));
  const ys = ids.map(() => height * (0.2 + 0.6 * rand()));
  const links: [number, number][] = [];
  for (const [a, b] of edges) {
    const ia = index.get(a);
    const ib = index.get(b);
    if (ia !== undefined && ib !== undefined && ia !== ib) links.push([ia, ib]);
  }
  const n = ids.length;
  if (n === 0) return new Map();
  const area = width * height;
  const ideal = Math.sqrt(area / n) * 0.7;

  for (let step = 0; step < iterations; step++) {
    const cool = 1 - step / iterations;
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-6) {
          // deterministic nudge for coincident nodes
          dx = 0.01 * ((i * 31 + j) % 7 - 3);
          dy = 0.01 * ((i * 17 + j) % 5 - 2);
          dist = Math.hypot(dx, dy) || 0.01;
        }
        const push = (ideal * ideal) / dist;
        fx[i] += (dx / dist) * push;
        fy[i] += (dy / dist) * push;
        fx[j] -= (dx / dist) * push;
        fy[j] -= (dy / dist) * push;
      }
    }
    for (const [ia, ib] of links) {
      const dx = xs[ia] - xs[ib];
      const dy = ys[ia] - ys[ib];
      const dist = Math.hypot(dx, dy) || 0.01;
      const pull = (dist * dist) / ideal;
      fx[ia] -= (dx / dist) * pull;
      fy[ia] -= (dy / dist) * pull;
      fx[ib] += (dx / dist) * pull;
      fy[ib] += (dy / dist) * pull;
    }
    const maxShift = 12 * cool + 0.5;
    for (let i = 0; i < n; i++) {
      // gentle centering keeps disconnected pieces on screen
      fx[i] += (width / 2 - xs[i]) * 0.02;
      fy[i] += (height / 2 - ys[i]) * 0.02;
      const magnitude = Math.hypot(fx[i], fy[i]) || 1;
      const shift = Math.min(magnitude, maxShift);
      xs[i] += (fx[i] / magnitude) * shift;
      ys[i] += (fy[i] / magnitude) * shift;
      xs[i] = Math.min(width - 20, Math.max(20, xs[i]));
      ys[i] = Math.min(height - 20, Math.max(20, ys[i]));
    }
  }
  return new Map(ids.map((id, i) => [id, { x: xs[i], y: ys[i] }]));
}
