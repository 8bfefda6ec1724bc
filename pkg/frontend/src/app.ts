// Browser shell: wires the session, polygon canvas, overlays, and
// minimap to the DOM.  All mathematics stays on the server.

import { ApiError, WireDiagonal, WorkbenchClient, sameDiagonal } from './api.js';
import {
  MinimapModel,
  currentNodeId,
  loadMinimap,
  neighbourMoves,
  nodeAt,
} from './minimap.js';
import { PolygonScene, buildScene, hitTestChord, renderScene } from './polygon.js';
import { DEFAULT_RANK, DEFAULT_SYSTEM, DEFAULT_WEIGHT, Session } from './session.js';

interface Elements {
  polygon: HTMLCanvasElement;
  minimap: HTMLCanvasElement;
  status: HTMLElement;
  history: HTMLElement;
  tiltLeft: HTMLButtonElement;
  tiltRight: HTMLButtonElement;
  undo: HTMLButtonElement;
  closureToggle: HTMLInputElement;
  torsionToggle: HTMLInputElement;
  minimapToggle: HTMLInputElement;
  fallback: HTMLElement;
}

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

export class ExplorerApp {
  private session!: Session;
  private scene!: PolygonScene;
  private selected: WireDiagonal | null = null;
  private minimapModel: MinimapModel | null = null;
  private polygonSize = 0;

  constructor(
    private readonly client: WorkbenchClient,
    private readonly el: Elements,
  ) {}

  async start(): Promise<void> {
    const info = await this.client.category(DEFAULT_RANK, DEFAULT_WEIGHT);
    this.polygonSize = info.polygon_size;
    this.session = await Session.start(this.client, DEFAULT_RANK, DEFAULT_WEIGHT, DEFAULT_SYSTEM);

    this.el.polygon.addEventListener('click', (event) => this.onPolygonClick(event));
    this.el.tiltLeft.addEventListener('click', () => void this.tilt('left'));
    this.el.tiltRight.addEventListener('click', () => void this.tilt('right'));
    this.el.undo.addEventListener('click', () => void this.undo());
    this.el.closureToggle.addEventListener('change', () => void this.refresh());
    this.el.torsionToggle.addEventListener('change', () => void this.refresh());
    this.el.minimapToggle.addEventListener('change', () => void this.toggleMinimap());
    this.el.minimap.addEventListener('click', (event) => void this.onMinimapClick(event));

    await this.refresh();
  }

  private setStatus(text: string): void {
    this.el.status.textContent = text;
  }

  private async refresh(): Promise<void> {
    const system = this.session.currentSystem;
    let closure;
    if (this.el.closureToggle.checked || this.el.torsionToggle.checked) {
      closure = this.el.torsionToggle.checked && this.selected
        ? await this.session.torsionOverlay([this.selected])
        : await this.session.closureOverlay();
    }
    this.scene = buildScene(this.polygonSize, system, this.el.polygon.width, 40, closure);
    try {
      const ctx = this.el.polygon.getContext('2d');
      if (!ctx) throw new Error('canvas unavailable');
      renderScene(ctx, this.scene, this.selected ?? undefined);
      this.el.fallback.innerHTML = '';
    } catch {
      // degrade to the server-rendered picture
      this.el.fallback.innerHTML = await this.session.fallbackSvg();
    }
    this.renderHistory();
    this.renderMinimap();
    const label = system.map((d) => `${d[0]}${d[1]}`).join(' ');
    this.setStatus(
      `system {${label}}` + (this.selected ? ` | selected ${this.selected[0]}${this.selected[1]}` : ''),
    );
  }

  private renderHistory(): void {
    if (this.session.history.length === 0) {
      this.el.history.textContent = '';
      return;
    }
    this.el.history.textContent = this.session.history
      .map((entry) => {
        const pivot = entry.pivot.map((d) => `${d[0]}${d[1]}`).join(',');
        return `${entry.direction === 'left' ? 'L' : 'R'}@${pivot}`;
      })
      .join(' -> ');
  }

  private onPolygonClick(event: MouseEvent): void {
    const rect = this.el.polygon.getBoundingClientRect();
    const chord = hitTestChord(this.scene, {
      x: event.clientX - rect.left,
      y: event.clientY - rect.top,
    });
    this.selected =
      chord && this.session.currentSystem.some((d) => sameDiagonal(d, chord.diagonal))
        ? chord.diagonal
        : null;
    void this.refresh();
  }

  private async tilt(direction: 'left' | 'right'): Promise<void> {
    if (!this.selected) {
      this.setStatus('select a diagonal of the system first');
      return;
    }
    try {
      await this.session.tilt([this.selected], direction);
      this.selected = null;
      await this.refresh();
    } catch (error) {
      this.showError(error);
    }
  }

  private async undo(): Promise<void> {
    if (!this.session.canUndo) return;
    try {
      await this.session.undo();
      this.selected = null;
      await this.refresh();
    } catch (error) {
      this.showError(error);
    }
  }

  private async toggleMinimap(): Promise<void> {
    if (this.el.minimapToggle.checked && !this.minimapModel) {
      this.minimapModel = await loadMinimap(this.client, this.session.rank, this.session.weight);
      if (!this.minimapModel.enabled) this.setStatus(this.minimapModel.notice ?? 'minimap disabled');
    }
    this.renderMinimap();
  }

  private renderMinimap(): void {
    const ctx = this.el.minimap.getContext('2d');
    if (!ctx) return;
    ctx.clearRect(0, 0, this.el.minimap.width, this.el.minimap.height);
    if (!this.el.minimapToggle.checked || !this.minimapModel?.enabled) return;
    const model = this.minimapModel;
    const byId = new Map(model.nodes.map((n) => [n.id, n] as const));
    ctx.strokeStyle = '#bbb';
    for (const edge of model.edges) {
      const from = byId.get(edge.source);
      const to = byId.get(edge.target);
      if (!from || !to) continue;
      ctx.beginPath();
      ctx.moveTo(from.position.x, from.position.y);
      ctx.lineTo(to.position.x, to.position.y);
      ctx.stroke();
    }
    const current = currentNodeId(model, this.session.currentSystem);
    for (const node of model.nodes) {
      ctx.beginPath();
      ctx.arc(node.position.x, node.position.y, node.id === current ? 7 : 5, 0, 2 * Math.PI);
      ctx.fillStyle = node.id === current ? '#b33434' : '#888';
      ctx.fill();
    }
  }

  private async onMinimapClick(event: MouseEvent): Promise<void> {
    if (!this.minimapModel?.enabled) return;
    const rect = this.el.minimap.getBoundingClientRect();
    const node = nodeAt(this.minimapModel, {
      x: event.clientX - rect.left,
      y: event.clientY - rect.top,
    });
    if (!node) return;
    const current = currentNodeId(this.minimapModel, this.session.currentSystem);
    if (!current || node.id === current) return;
    const move = neighbourMoves(this.minimapModel, current).find(
      (m) => m.targetId === node.id,
    );
    if (!move) {
      this.setStatus('that node is not one tilt away');
      return;
    }
    try {
      await this.session.tilt([move.pivot], move.direction);
      await this.refresh();
    } catch (error) {
      this.showError(error);
    }
  }

  private showError(error: unknown): void {
    if (error instanceof ApiError) {
      const detail =
        error.code === 'tilt_rule_incomplete'
          ? ` (configuration: ${JSON.stringify(error.details)})`
          : '';
      this.setStatus(`error ${error.code}: ${error.message}${detail}`);
    } else {
      this.setStatus(`error: ${String(error)}`);
    }
  }
}

export function bootstrap(baseUrl: string): ExplorerApp {
  const app = new ExplorerApp(new WorkbenchClient(baseUrl), {
    polygon: element<HTMLCanvasElement>('polygon'),
    minimap: element<HTMLCanvasElement>('minimap'),
    status: element<HTMLElement>('status'),
    history: element<HTMLElement>('history'),
    tiltLeft: element<HTMLButtonElement>('tilt-left'),
    tiltRight: element<HTMLButtonElement>('tilt-right'),
    undo: element<HTMLButtonElement>('undo'),
    closureToggle: element<HTMLInputElement>('toggle-closure'),
    torsionToggle: element<HTMLInputElement>('toggle-torsion'),
    minimapToggle: element<HTMLInputElement>('toggle-minimap'),
    fallback: element<HTMLElement>('fallback'),
  });
  void app.start();
  return app;
}
