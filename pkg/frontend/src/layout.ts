// Deterministic force-free layout: vertices sit on a circle in index order,
// so the same matrix always renders identically (stable screenshots).

export interface Point {
  x: number;
  y: number;
}

export function circularLayout(
  n: number,
  radius = 120,
  cx = 160,
  cy = 160,
): Point[] {
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    // vertex 1 at the top, clockwise
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / n;
    points.push({
      x: Math.round((cx + radius * Math.cos(angle)) * 100) / 100,
      y: Math.round((cy + radius * Math.sin(angle)) * 100) / 100,
    });
  }
  return points;
}
