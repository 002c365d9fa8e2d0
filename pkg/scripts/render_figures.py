"""Write SVG pictures of the fixture tilings to an output directory."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from multitile.io import load_polytope_file
from multitile.render import RenderSpec, default_window, render_svg
from multitile.tiler import classify
from multitile.vdc import replication_decomposition

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@dataclass
class Config:
    out: Path = Path("figures")
    stems: tuple = ("half_hexagon", "octagon", "fig2_pentagon", "unit_square",
                    "fig4_parallelogram", "fig4_hexagon", "fig4_rhombus")
    coset_stems: tuple = ("fig4_parallelogram", "fig4_hexagon", "fig4_rhombus")


def run(cfg: Config) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for stem in cfg.stems:
        pf = load_polytope_file(FIXTURES / f"{stem}.json")
        K = pf.polytope
        # keep deep overlaps readable: total opacity of about one half
        m = max(1, classify(K).max_open_mult)
        spec = RenderSpec(default_window(K), fill_opacity=round(0.5 / m, 3))
        (cfg.out / f"{stem}.svg").write_text(render_svg(K, spec, title=pf.name))
        if stem in cfg.coset_stems:
            rep = replication_decomposition(K)
            (cfg.out / f"{stem}_cosets.svg").write_text(render_svg(K, spec, rep, title=pf.name))
        print("rendered", stem)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Config.out)
    run(Config(out=p.parse_args().out))
