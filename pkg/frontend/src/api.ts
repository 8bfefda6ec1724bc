// Typed client for the workbench JSON-over-HTTP service.
// Every request carries the category parameters; the client holds no
// mathematical state of its own.

export type WireDiagonal = [number, number];

export interface CategoryInfo {
  rank: number;
  weight: number;
  polygon_size: number;
  indecomposables: number;
}

export interface TiltAction {
  simple: WireDiagonal;
  kind: 'shifted' | 'replaced' | 'unchanged';
  result: WireDiagonal;
  pivot?: WireDiagonal;
}

export interface TiltResponse {
  direction: 'left' | 'right';
  pivot: WireDiagonal[];
  source: WireDiagonal[];
  system: WireDiagonal[];
  actions: TiltAction[];
}

export interface SequenceRecord {
  sub: WireDiagonal;
  quotient: WireDiagonal;
}

export interface TorsionPairData {
  torsion: WireDiagonal[];
  free: WireDiagonal[];
  mixed: Record<string, SequenceRecord | null>;
}

export interface ClosureResponse {
  seed: WireDiagonal[];
  members: WireDiagonal[];
  records: Record<string, SequenceRecord>;
  factors: Record<string, [WireDiagonal, number][]>;
  depths: Record<string, number>;
  torsion_pair?: TorsionPairData;
}

export interface ArQuiverResponse {
  vertices: WireDiagonal[];
  arrows: [WireDiagonal, WireDiagonal][];
}

export interface GraphNode {
  id: string;
  system: WireDiagonal[];
}

export interface GraphEdge {
  source: string;
  target: string;
  pivot: WireDiagonal;
  direction: 'left' | 'right';
}

export interface TiltingGraphResponse {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
    readonly details: unknown = {},
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class WorkbenchClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const text = await response.text();
    if (!response.ok) {
      let code = 'parameter_error';
      let message = text;
      let details: unknown = {};
      try {
        const body = JSON.parse(text);
        code = body.code ?? code;
        message = body.message ?? message;
        details = body.details ?? details;
      } catch {
        // non-JSON error body; keep raw text as the message
      }
      throw new ApiError(code, message, response.status, details);
    }
    return JSON.parse(text) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
  }

  category(e: number, w: number): Promise<CategoryInfo> {
    return this.request(`/category?e=${e}&w=${w}`);
  }

  diagonals(e: number, w: number): Promise<{ diagonals: WireDiagonal[] }> {
    return this.request(`/diagonals?e=${e}&w=${w}`);
  }

  arQuiver(e: number, w: number): Promise<ArQuiverResponse> {
    return this.request(`/ar-quiver?e=${e}&w=${w}`);
  }

  closure(
    e: number,
    w: number,
    system: WireDiagonal[],
    torsion?: WireDiagonal[],
  ): Promise<ClosureResponse> {
    const body: Record<string, unknown> = { system };
    if (torsion !== undefined) body.torsion = torsion;
    return this.post(`/closure?e=${e}&w=${w}`, body);
  }

  tilt(
    e: number,
    w: number,
    system: WireDiagonal[],
    pivot: WireDiagonal[],
    direction: 'left' | 'right',
  ): Promise<TiltResponse> {
    return this.post(`/tilt?e=${e}&w=${w}`, { system, pivot, direction });
  }

  tiltingGraph(e: number, w: number): Promise<TiltingGraphResponse> {
    return this.request(`/tilting-graph?e=${e}&w=${w}`);
  }

  /** Static SVG of a system with its closure, the canvas fallback. */
  async closureSvg(e: number, w: number, system: WireDiagonal[]): Promise<string> {
    const response = await this.fetchFn(
      `${this.baseUrl}/closure?e=${e}&w=${w}&format=svg`,
      {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify({ system }),
      },
    );
    if (!response.ok) {
      throw new ApiError('parameter_error', await response.text(), response.status);
    }
    return response.text();
  }
}

export function sameDiagonal(a: WireDiagonal, b: WireDiagonal): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export function sameSystem(a: WireDiagonal[], b: WireDiagonal[]): boolean {
  if (a.length !== b.length) return false;
  const key = (s: WireDiagonal[]) => s.map((d) => `${d[0]},${d[1]}`).sort().join(';');
  return key(a) === key(b);
}
