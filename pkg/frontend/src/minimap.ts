// Tilting-graph minimap: fetch the graph, lay the nodes on a circle,
// track the node of the current system, and translate a neighbour click
// into the tilt that edge performs.

import {
  GraphEdge,
  TiltingGraphResponse,
  WireDiagonal,
  WorkbenchClient,
  sameSystem,
} from './api.js';
import { Point } from './polygon.js';

export interface MinimapNode {
  id: string;
  system: WireDiagonal[];
  position: Point;
}

export interface MinimapModel {
  enabled: boolean;
  notice?: string;
  nodes: MinimapNode[];
  edges: GraphEdge[];
}

export const DEFAULT_NODE_CAP = 64;

export async function loadMinimap(
  client: WorkbenchClient,
  rank: number,
  weight: number,
  nodeCap: number = DEFAULT_NODE_CAP,
  size = 260,
): Promise<MinimapModel> {
  // the category endpoint is cheap; check the size before fetching the graph
  const graph: TiltingGraphResponse = await client.tiltingGraph(rank, weight);
  if (graph.nodes.length > nodeCap) {
    return {
      enabled: false,
      notice: `tilting graph has ${graph.nodes.length} nodes (cap ${nodeCap})`,
      nodes: [],
      edges: [],
    };
  }
  const radius = size / 2 - 18;
  const nodes = graph.nodes.map((node, i) => {
    const angle = (2 * Math.PI * i) / graph.nodes.length - Math.PI / 2;
    return {
      id: node.id,
      system: node.system,
      position: {
        x: size / 2 + radius * Math.cos(angle),
        y: size / 2 + radius * Math.sin(angle),
      },
    };
  });
  return { enabled: true, nodes, edges: graph.edges };
}

export function currentNodeId(model: MinimapModel, system: WireDiagonal[]): string | null {
  const node = model.nodes.find((n) => sameSystem(n.system, system));
  return node ? node.id : null;
}

export interface NeighbourMove {
  targetId: string;
  pivot: WireDiagonal;
  direction: 'left' | 'right';
}

/** Moves available from a node; clicking a neighbour performs one. */
export function neighbourMoves(model: MinimapModel, nodeId: string): NeighbourMove[] {
  return model.edges
    .filter((edge) => edge.source === nodeId)
    .map((edge) => ({
      targetId: edge.target,
      pivot: edge.pivot,
      direction: edge.direction,
    }));
}

export function nodeAt(model: MinimapModel, point: Point, tolerance = 9): MinimapNode | null {
  for (const node of model.nodes) {
    if (Math.hypot(node.position.x - point.x, node.position.y - point.y) <= tolerance) {
      return node;
    }
  }
  return null;
}
