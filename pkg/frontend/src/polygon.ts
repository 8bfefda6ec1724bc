// Polygon scene geometry: vertex layout, chord classification, and
// hit-testing.  Pure functions so the scene can be tested without a DOM;
// drawing to a canvas context happens in renderScene.

import { ClosureResponse, WireDiagonal, sameDiagonal } from './api.js';

export interface Point {
  x: number;
  y: number;
}

export type ChordKind = 'simple' | 'closure' | 'torsion' | 'free';

export interface Chord {
  diagonal: WireDiagonal;
  from: Point;
  to: Point;
  kind: ChordKind;
}

export interface PolygonScene {
  size: number;
  vertices: Point[];
  labels: string[];
  chords: Chord[];
}

/** Vertex k of the N-gon sits at angle 90 - k*360/N, clockwise from the top. */
export function vertexPosition(k: number, n: number, size: number, margin: number): Point {
  const angle = ((90 - (360 * k) / n) * Math.PI) / 180;
  const radius = size / 2 - margin;
  return {
    x: size / 2 + radius * Math.cos(angle),
    y: size / 2 - radius * Math.sin(angle),
  };
}

export function buildScene(
  polygonSize: number,
  system: WireDiagonal[],
  size = 420,
  margin = 40,
  closure?: ClosureResponse,
): PolygonScene {
  const vertices = Array.from({ length: polygonSize }, (_, k) =>
    vertexPosition(k, polygonSize, size, margin),
  );
  const labels = Array.from({ length: polygonSize }, (_, k) => String(k));
  const chords: Chord[] = [];

  const classify = (d: WireDiagonal): ChordKind => {
    const pair = closure?.torsion_pair;
    if (pair) {
      if (pair.torsion.some((t) => sameDiagonal(t, d))) return 'torsion';
      if (pair.free.some((f) => sameDiagonal(f, d))) return 'free';
    }
    return 'simple';
  };

  for (const d of system) {
    chords.push({
      diagonal: d,
      from: vertices[d[0]]!,
      to: vertices[d[1]]!,
      kind: classify(d),
    });
  }
  if (closure) {
    for (const member of closure.members) {
      if (system.some((d) => sameDiagonal(d, member))) continue;
      chords.push({
        diagonal: member,
        from: vertices[member[0]]!,
        to: vertices[member[1]]!,
        kind: 'closure',
      });
    }
  }
  return { size, vertices, labels, chords };
}

function distanceToSegment(p: Point, a: Point, b: Point): number {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const lengthSquared = dx * dx + dy * dy;
  if (lengthSquared === 0) return Math.hypot(p.x - a.x, p.y - a.y);
  let t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / lengthSquared;
  t = Math.max(0, Math.min(1, t));
  return Math.hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

/** The chord under the pointer, preferring system chords over overlays. */
export function hitTestChord(
  scene: PolygonScene,
  point: Point,
  tolerance = 8,
): Chord | null {
  let best: Chord | null = null;
  let bestDistance = tolerance;
  for (const chord of scene.chords) {
    const distance = distanceToSegment(point, chord.from, chord.to);
    const preferred =
      distance < bestDistance ||
      (distance === bestDistance && best?.kind === 'closure' && chord.kind !== 'closure');
    if (preferred) {
      best = chord;
      bestDistance = distance;
    }
  }
  return best;
}

const CHORD_STYLE: Record<ChordKind, { stroke: string; dash: number[] }> = {
  simple: { stroke: '#b33434', dash: [] },
  torsion: { stroke: '#8239a8', dash: [] },
  free: { stroke: '#2c6fb3', dash: [] },
  closure: { stroke: '#3a8a3a', dash: [6, 4] },
};

export function renderScene(
  ctx: CanvasRenderingContext2D,
  scene: PolygonScene,
  highlighted?: WireDiagonal,
): void {
  ctx.clearRect(0, 0, scene.size, scene.size);
  ctx.strokeStyle = '#999';
  ctx.setLineDash([]);
  ctx.lineWidth = 1;
  ctx.beginPath();
  scene.vertices.forEach((v, i) => (i === 0 ? ctx.moveTo(v.x, v.y) : ctx.lineTo(v.x, v.y)));
  ctx.closePath();
  ctx.stroke();

  for (const chord of scene.chords) {
    const style = CHORD_STYLE[chord.kind];
    ctx.strokeStyle = style.stroke;
    ctx.setLineDash(style.dash);
    ctx.lineWidth =
      highlighted && sameDiagonal(chord.diagonal, highlighted) ? 4 : 2;
    ctx.beginPath();
    ctx.moveTo(chord.from.x, chord.from.y);
    ctx.lineTo(chord.to.x, chord.to.y);
    ctx.stroke();
  }

  ctx.setLineDash([]);
  ctx.fillStyle = '#222';
  ctx.font = '13px sans-serif';
  ctx.textAlign = 'center';
  ctx.textBaseline = 'middle';
  scene.vertices.forEach((v, k) => {
    const cx = scene.size / 2;
    const cy = scene.size / 2;
    ctx.fillText(scene.labels[k]!, cx + (v.x - cx) * 1.12, cy + (v.y - cy) * 1.12);
  });
}
