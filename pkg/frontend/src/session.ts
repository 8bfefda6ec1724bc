// Session state for the explorer.
//
// The session never computes mathematics locally: every displayed system
// was returned by the server, undo pivots are read off the server's tilt
// action log, and the history can be replayed through the server to
// reproduce the current system.

import {
  ApiError,
  ClosureResponse,
  TiltResponse,
  WireDiagonal,
  WorkbenchClient,
  sameSystem,
} from './api.js';

export interface TiltHistoryEntry {
  direction: 'left' | 'right';
  pivot: WireDiagonal[];
  /** where the pivot elements landed; tilting there in the mirror
   *  direction undoes the move (read from the server's action log) */
  inversePivot: WireDiagonal[];
  source: WireDiagonal[];
  result: WireDiagonal[];
}

export interface Overlays {
  closure: boolean;
  torsion: boolean;
  arQuiver: boolean;
  minimap: boolean;
}

export const DEFAULT_RANK = 3;
export const DEFAULT_WEIGHT = 2;
export const DEFAULT_SYSTEM: WireDiagonal[] = [
  [3, 5],
  [1, 6],
  [7, 9],
];

function inversePivotOf(move: TiltResponse): WireDiagonal[] {
  return move.actions
    .filter((action) => action.kind === 'shifted')
    .map((action) => action.result);
}

export class Session {
  readonly history: TiltHistoryEntry[] = [];
  overlays: Overlays = { closure: false, torsion: false, arQuiver: false, minimap: false };
  torsionSelection: WireDiagonal[] = [];
  private current: WireDiagonal[];

  private constructor(
    private readonly client: WorkbenchClient,
    readonly rank: number,
    readonly weight: number,
    readonly initialSystem: WireDiagonal[],
  ) {
    this.current = initialSystem;
  }

  /** Open a session; the server validates the starting system. */
  static async start(
    client: WorkbenchClient,
    rank: number = DEFAULT_RANK,
    weight: number = DEFAULT_WEIGHT,
    system: WireDiagonal[] = DEFAULT_SYSTEM,
  ): Promise<Session> {
    // a closure request both validates the system server-side and warms
    // the first overlay
    const closure = await client.closure(rank, weight, system);
    return new Session(client, rank, weight, closure.seed);
  }

  get currentSystem(): WireDiagonal[] {
    return this.current;
  }

  get canUndo(): boolean {
    return this.history.length > 0;
  }

  async tilt(pivot: WireDiagonal[], direction: 'left' | 'right'): Promise<TiltResponse> {
    const move = await this.client.tilt(
      this.rank,
      this.weight,
      this.current,
      pivot,
      direction,
    );
    this.history.push({
      direction,
      pivot,
      inversePivot: inversePivotOf(move),
      source: move.source,
      result: move.system,
    });
    this.current = move.system;
    return move;
  }

  /** Undo the last move by asking the server for the mirror tilt. */
  async undo(): Promise<WireDiagonal[]> {
    const last = this.history.pop();
    if (!last) throw new ApiError('parameter_error', 'nothing to undo', 0);
    const mirror = last.direction === 'left' ? 'right' : 'left';
    const move = await this.client.tilt(
      this.rank,
      this.weight,
      this.current,
      last.inversePivot,
      mirror,
    );
    if (!sameSystem(move.system, last.source)) {
      throw new ApiError('parameter_error', 'undo did not restore the source system', 0);
    }
    this.current = move.system;
    return this.current;
  }

  /** Re-run the whole history from the initial system on the server. */
  async replay(): Promise<WireDiagonal[]> {
    let system = this.initialSystem;
    for (const entry of this.history) {
      const move = await this.client.tilt(
        this.rank,
        this.weight,
        system,
        entry.pivot,
        entry.direction,
      );
      system = move.system;
    }
    return system;
  }

  closureOverlay(): Promise<ClosureResponse> {
    return this.client.closure(this.rank, this.weight, this.current);
  }

  torsionOverlay(selection: WireDiagonal[]): Promise<ClosureResponse> {
    return this.client.closure(this.rank, this.weight, this.current, selection);
  }

  /** Server-rendered picture of the current system, the canvas fallback. */
  fallbackSvg(): Promise<string> {
    return this.client.closureSvg(this.rank, this.weight, this.current);
  }
}
