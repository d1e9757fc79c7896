/** Pure geometry for the pie and column charts in the bottom panels. */

export interface PieSlice {
  label: string;
  value: number;
  startAngle: number;
  endAngle: number;
  color: string;
}

export function pieSlices(
  items: { label: string; value: number }[],
  colors: string[],
): PieSlice[] {
  const positive = items.filter((item) => item.value > 0);
  const total = positive.reduce((sum, item) => sum + item.value, 0);
  if (total <= 0) return [];
  const slices: PieSlice[] = [];
  let angle = -Math.PI / 2;
  positive.forEach((item, i) => {
    const sweep = (item.value / total) * 2 * Math.PI;
    slices.push({
      label: item.label,
      value: item.value,
      startAngle: angle,
      endAngle: angle + sweep,
      color: colors[i % colors.length],
    });
    angle += sweep;
  });
  return slices;
}

export function arcPath(
  cx: number,
  cy: number,
  r: number,
  startAngle: number,
  endAngle: number,
): string {
  const sweep = endAngle - startAngle;
  if (sweep >= 2 * Math.PI - 1e-9) {
    // full circle: two arcs, a single arc of 360 degrees collapses
    const mid = startAngle + Math.PI;
    const x0 = cx + r * Math.cos(startAngle);
    const y0 = cy + r * Math.sin(startAngle);
    const x1 = cx + r * Math.cos(mid);
    const y1 = cy + r * Math.sin(mid);
    return `M ${x0} ${y0} A ${r} ${r} 0 1 1 ${x1} ${y1} A ${r} ${r} 0 1 1 ${x0} ${y0} Z`;
  }
  const x0 = cx + r * Math.cos(startAngle);
  const y0 = cy + r * Math.sin(startAngle);
  const x1 = cx + r * Math.cos(endAngle);
  const y1 = cy + r * Math.sin(endAngle);
  const large = sweep > Math.PI ? 1 : 0;
  return `M ${cx} ${cy} L ${x0} ${y0} A ${r} ${r} 0 ${large} 1 ${x1} ${y1} Z`;
}

export interface Column {
  label: string;
  value: number;
  x: number;
  y: number;
  width: number;
  height: number;
}

export function columns(
  items: { label: string; value: number }[],
  plotWidth: number,
  plotHeight: number,
): Column[] {
  if (items.length === 0) return [];
  const peak = Math.max(...items.map((item) => item.value), 1);
  const slot = plotWidth / items.length;
  const barWidth = Math.max(4, slot * 0.7);
  return items.map((item, i) => {
    const height = (item.value / peak) * plotHeight;
    return {
      label: item.label,
      value: item.value,
      x: i * slot + (slot - barWidth) / 2,
      y: plotHeight - height,
      width: barWidth,
      height,
    };
  });
}
