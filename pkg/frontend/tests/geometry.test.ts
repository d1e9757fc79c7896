import { describe, expect, it } from "vitest";

import {
  OVERLAP_SHADE_FACTOR,
  focusFill,
  grayscale,
  luminance,
  polygonPoints,
  radiusFromArea,
  shapeForCommunityCount,
} from "../src/geometry.js";

describe("node sizing", () => {
  it("radius gives back the same area", () => {
    for (const area of [1, 40, 400, 168.8]) {
      const r = radiusFromArea(area);
      expect(Math.PI * r * r).toBeCloseTo(area, 9);
    }
  });

  it("zero and negative areas collapse to zero", () => {
    expect(radiusFromArea(0)).toBe(0);
    expect(radiusFromArea(-5)).toBe(0);
  });
});

describe("polygon encoding of community count", () => {
  it("single community renders a circle", () => {
    expect(shapeForCommunityCount(1)).toEqual({ kind: "circle" });
    expect(shapeForCommunityCount(0)).toEqual({ kind: "circle" });
  });

  it("two communities render a badged diamond", () => {
    const shape = shapeForCommunityCount(2);
    expect(shape.kind).toBe("polygon");
    if (shape.kind === "polygon") {
      expect(shape.sides).toBe(4);
      expect(shape.rotation).toBe(0); // points up: visually a diamond
      expect(shape.badge).toBe(2);
    }
  });

  it("three through five map to matching side counts", () => {
    for (const count of [3, 4, 5]) {
      const shape = shapeForCommunityCount(count);
      expect(shape.kind).toBe("polygon");
      if (shape.kind === "polygon") {
        expect(shape.sides).toBe(count);
        expect(shape.badge).toBeNull();
      }
    }
  });

  it("four communities render an axis-aligned square", () => {
    const shape = shapeForCommunityCount(4);
    if (shape.kind === "polygon") {
      expect(shape.sides).toBe(4);
      expect(shape.rotation).toBeCloseTo(Math.PI / 4, 12);
    }
  });

  it("six or more cap at hexagons", () => {
    for (const count of [6, 7, 11]) {
      const shape = shapeForCommunityCount(count);
      if (shape.kind === "polygon") expect(shape.sides).toBe(6);
    }
  });

  it("polygon points lie on the circumscribed circle", () => {
    const points = polygonPoints(10, 20, 5, 6, 0);
    expect(points).toHaveLength(6);
    for (const [x, y] of points) {
      expect(Math.hypot(x - 10, y - 20)).toBeCloseTo(5, 9);
    }
  });
});

describe("focus shading", () => {
  const color = "#4e79a7";

  it("selected node keeps its color", () => {
    expect(focusFill(color, true, false)).toBe(color);
  });

  it("non-selected nodes are grayscale", () => {
    const fill = focusFill(color, false, false);
    expect(fill).toMatch(/^#([0-9a-f]{2})\1\1$/);
  });

  it("overlapping siblings are darker than non-overlapping ones", () => {
    const plain = focusFill(color, false, false);
    const overlap = focusFill(color, false, true);
    expect(luminance(overlap)).toBeLessThan(luminance(plain));
    expect(luminance(overlap)).toBeCloseTo(
      luminance(plain) * OVERLAP_SHADE_FACTOR,
      0,
    );
  });

  it("grayscale keeps luminance", () => {
    const gray = grayscale(color);
    expect(luminance(gray)).toBeCloseTo(luminance(color), 0);
  });
});
