"""Write DOT files for the step graphs of the worked examples.

    python3 scripts/render_graphs.py [outdir]     (default: ./graphs)

Render with e.g. ``dot -Tpdf graphs/a4_lambda.dot -o a4_lambda.pdf``.
"""

import sys
from pathlib import Path

from spinal import dynsys as D
from spinal.fixtures import a4, d4, fig2, hexagon


def main(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)

    G = a4()
    b = G.directed_generators["b"]
    maps = [D.build_step_graph(G, D.LAMBDA_MAP, b, "lambda_b"),
            D.build_step_graph(G, D.LAMBDA_MAP, b * b, "lambda_b^2")]
    (outdir / "a4_lambda.dot").write_text(D.export_dot(maps, namer=str, name="a4"))

    G = hexagon()
    graph = D.build_step_graph(G, D.SIGMA, [G.directed_generators["b"]], "Sigma_b")
    (outdir / "hexagon_sigma.dot").write_text(D.export_dot(graph, mode="subset", namer=G.name_of, name="hexagon"))

    G = fig2()
    b = G.directed_generators["b"]
    graphs = [D.build_step_graph(G, D.LAMBDA, b, "Lambda_b"), D.build_step_graph(G, D.LAMBDA, b * b, "Lambda_b^2")]
    (outdir / "fig2_lambda.dot").write_text(D.export_dot(graphs, mode="subset", namer=G.name_of, name="fig2"))

    G = d4()
    graph = D.build_step_graph(G, D.SIGMA, [G.directed_generators["b"]], "Sigma_b")
    (outdir / "d4_sigma.dot").write_text(D.export_dot(graph, mode="subset", namer=G.name_of, name="d4"))

    for path in sorted(outdir.glob("*.dot")):
        print(f"wrote {path}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("graphs"))
