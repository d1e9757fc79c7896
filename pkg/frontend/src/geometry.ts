/** Node sizing, polygon encoding, and focus shading. */

export const PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
];

export function colorFor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

/** Circle radius whose area equals the given node area. */
export function radiusFromArea(area: number): number {
  return Math.sqrt(Math.max(area, 0) / Math.PI);
}

export type NodeShape =
  | { kind: "circle" }
  | { kind: "polygon"; sides: number; rotation: number; badge: number | null };

/**
 * Shape encoding of how many communities an author belongs to: single ->
 * circle, two -> diamond with a count badge, three -> triangle, four ->
 * square, five -> pentagon, six or more -> hexagon.
 */
export function shapeForCommunityCount(count: number): NodeShape {
  if (count <= 1) return { kind: "circle" };
  if (count === 2) return { kind: "polygon", sides: 4, rotation: 0, badge: 2 };
  const sides = Math.min(count, 6);
  // squares sit axis-aligned so they read differently from the diamond
  const rotation = sides === 4 ? Math.PI / 4 : -Math.PI / 2;
  return { kind: "polygon", sides, rotation, badge: null };
}

export function polygonPoints(
  cx: number,
  cy: number,
  radius: number,
  sides: number,
  rotation: number,
): [number, number][] {
  const points: [number, number][] = [];
  for (let i = 0; i < sides; i++) {
    const angle = rotation + (2 * Math.PI * i) / sides;
    points.push([cx + radius * Math.cos(angle), cy + radius * Math.sin(angle)]);
  }
  return points;
}

function channel(hex: string, offset: number): number {
  return parseInt(hex.slice(offset, offset + 2), 16);
}

function toHex(value: number): string {
  return Math.round(Math.min(255, Math.max(0, value)))
    .toString(16)
    .padStart(2, "0");
}

export function luminance(hex: string): number {
  const r = channel(hex, 1);
  const g = channel(hex, 3);
  const b = channel(hex, 5);
  return 0.2126 * r + 0.7152 * g + 0.0722 * b;
}

/** Grayscale of a color, optionally darkened (factor < 1). */
export function grayscale(hex: string, factor = 1.0): string {
  const gray = toHex(luminance(hex) * factor);
  return `#${gray}${gray}${gray}`;
}

export const OVERLAP_SHADE_FACTOR = 0.55;

/**
 * Fill for a community node in the focused view: the chosen node keeps its
 * color, overlapping siblings turn a darker gray, everything else a plain
 * gray of its own luminance.
 */
export function focusFill(
  color: string,
  isSelected: boolean,
  overlapsSelected: boolean,
): string {
  if (isSelected) return color;
  return grayscale(color, overlapsSelected ? OVERLAP_SHADE_FACTOR : 1.0);
}
