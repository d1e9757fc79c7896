import { describe, expect, it } from "vitest";

import { forceLayout, hashString, mulberry32 } from "../src/layout.js";

const IDS = ["a", "b", "c", "d", "e"];
const EDGES: [string, string][] = [
  ["a", "b"],
  ["b", "c"],
  ["c", "a"],
  ["d", "e"],
];
const OPTS = { width: 760, height: 480, seed: 42 };

describe("seeded layout", () => {
  it("same seed reproduces identical positions", () => {
    const first = forceLayout(IDS, EDGES, OPTS);
    const second = forceLayout(IDS, EDGES, OPTS);
    expect([...first.entries()]).toEqual([...second.entries()]);
  });

  it("different seeds move the picture", () => {
    const first = forceLayout(IDS, EDGES, OPTS);
    const second = forceLayout(IDS, EDGES, { ...OPTS, seed: 43 });
    const moved = IDS.some((id) => {
      const p = first.get(id)!;
      const q = second.get(id)!;
      return Math.hypot(p.x - q.x, p.y - q.y) > 1;
    });
    expect(moved).toBe(true);
  });

  it("keeps every node inside the frame", () => {
    const layout = forceLayout(IDS, EDGES, OPTS);
    for (const { x, y } of layout.values()) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThanOrEqual(OPTS.width);
      expect(y).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThanOrEqual(OPTS.height);
    }
  });

  it("pulls linked nodes closer than unlinked ones on average", () => {
    const layout = forceLayout(IDS, EDGES, { ...OPTS, iterations: 300 });
    const dist = (a: string, b: string) => {
      const p = layout.get(a)!;
      const q = layout.get(b)!;
      return Math.hypot(p.x - q.x, p.y - q.y);
    };
    const linked = EDGES.map(([a, b]) => dist(a, b));
    const linkedMean = linked.reduce((s, d) => s + d, 0) / linked.length;
    const unlinked = [dist("a", "d"), dist("b", "e"), dist("c", "d")];
    const unlinkedMean = unlinked.reduce((s, d) => s + d, 0) / unlinked.length;
    expect(linkedMean).toBeLessThan(unlinkedMean);
  });

  it("handles empty and singleton graphs", () => {
    expect(forceLayout([], [], OPTS).size).toBe(0);
    const single = forceLayout(["only"], [], OPTS);
    expect(single.size).toBe(1);
  });
});

describe("hashing and PRNG", () => {
  it("hash is stable and distinguishes queries", () => {
    expect(hashString("a|2010|2015")).toBe(hashString("a|2010|2015"));
    expect(hashString("a|2010|2015")).not.toBe(hashString("b|2010|2015"));
  });

  it("prng is deterministic in [0, 1)", () => {
    const a = mulberry32(7);
    const b = mulberry32(7);
    for (let i = 0; i < 100; i++) {
      const value = a();
      expect(value).toBe(b());
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThan(1);
    }
  });
});
