"""The atlas of all simple minded systems and their left tilts.

At rank 2 and weight 3 there are exactly 15 systems; each has two left
tilts, giving a 30-edge graph that is connected: any system reaches any
other by tilting.  The script prints the graph, checks reversibility,
and writes DOT output.
"""

from negcluster import enumerate_sms, make_category, right_tilt, suspend, tilting_graph
from negcluster.render import export_dot_tilting_graph

params = make_category(rank=2, weight=3)
systems = enumerate_sms(params)
print(f"{len(systems)} simple minded systems on the {params.polygon_size}-gon")

graph = tilting_graph(params)
print(f"tilting graph: {len(graph.nodes)} nodes, {len(graph.edges)} left-tilt edges")

fmt = lambda s: "{" + ",".join(f"{d.lo}{d.hi}" for d in s.simples) + "}"
for edge in graph.edges[:6]:
    print(f"  {fmt(edge.source)} --{edge.pivot.lo}{edge.pivot.hi}--> {fmt(edge.target)}")
print("  ...")

reversible = all(
    right_tilt(e.target, [suspend(e.pivot, -1, params)]).result.simples
    == e.source.simples
    for e in graph.edges
)
print(f"every left edge is reversed by a right tilt: {reversible}")

with open("tilting_graph_e2_w3.gv", "w") as handle:
    handle.write(export_dot_tilting_graph(graph))
print("wrote tilting_graph_e2_w3.gv")
