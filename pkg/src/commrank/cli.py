"""Command-line driver for the ingest / detect / rank pipeline.

Subcommands: validate, detect, rank, export, serve.  Outputs are fully
deterministic: repeated runs on the same inputs are byte-identical.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .conga import best_cut, communityset_lines, dendrogram_lines, run_conga
from .dataset import DatasetError, load_dataset
from .influence import InfluenceReport, rank_top_k, report_lines, round2
from .model import CorpusFilter, InvalidRange, build_coauthor_graph, filter_corpus
from .service import build_snapshot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    dataset: Path
    topics: tuple[str, ...]
    year_from: int | None
    year_to: int | None
    k: int | None
    out: Path | None
    port: int


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract wants 1
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="commrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("validate", "load the dataset and report invariant violations"),
        ("detect", "detect communities; write dendrogram and community files"),
        ("rank", "rank communities by influence; print a report table"),
        ("export", "write the full query payload as JSON"),
        ("serve", "start the HTTP query service"),
    ]:
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("--dataset", required=True, type=Path)
        if name in ("detect", "rank", "export"):
            cmd.add_argument("--topics", default="", help="comma-separated keywords")
            cmd.add_argument("--from", dest="year_from", type=int, default=None)
            cmd.add_argument("--to", dest="year_to", type=int, default=None)
        if name in ("rank", "export"):
            cmd.add_argument("--k", type=int, default=None)
        if name == "detect":
            cmd.add_argument("--out", required=True, type=Path, help="output directory")
        if name in ("rank", "export"):
            cmd.add_argument("--out", type=Path, default=None)
        if name == "serve":
            cmd.add_argument("--port", type=int, default=8000)
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    topics = tuple(
        t.strip() for t in getattr(args, "topics", "").split(",") if t.strip()
    )
    return CliConfig(
        command=args.command,
        dataset=args.dataset,
        topics=topics,
        year_from=getattr(args, "year_from", None),
        year_to=getattr(args, "year_to", None),
        k=getattr(args, "k", None),
        out=getattr(args, "out", None),
        port=getattr(args, "port", 8000),
    )


def _load(config: CliConfig):
    dataset = load_dataset(config.dataset)
    year_min, year_max = dataset.year_span()
    year_from = config.year_from if config.year_from is not None else year_min
    year_to = config.year_to if config.year_to is not None else year_max
    return dataset, year_from, year_to


def _filtered(config: CliConfig):
    dataset, year_from, year_to = _load(config)
    papers = filter_corpus(dataset.papers, config.topics, year_from, year_to)
    provenance = CorpusFilter(config.topics, year_from, year_to)
    return dataset, papers, build_coauthor_graph(papers, provenance)


def _format_table(reports: tuple[InfluenceReport, ...]) -> str:
    header = (
        f"{'rank':>4}  {'community':>9}  {'influence':>9}  {'normalized':>10}  "
        f"{'min':>5}  {'mean':>8}  {'h-index':>7}  members"
    )
    rows = [header, "-" * len(header)]
    for r in reports:
        rows.append(
            f"{r.rank:>4}  {r.community_id:>9}  {round2(r.influence):>9.2f}  "
            f"{round2(r.normalized):>10.2f}  {r.baselines.min_citation:>5}  "
            f"{round2(r.baselines.mean_citation):>8.2f}  {r.baselines.h_index:>7}  "
            f"{','.join(r.member_ids)}"
        )
    return "\n".join(rows)


def cmd_validate(config: CliConfig) -> int:
    try:
        dataset = load_dataset(config.dataset)
    except (OSError, DatasetError) as exc:
        print(f"invalid dataset: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(f"ok: {len(dataset.papers)} papers, {len(dataset.authors)} authors")
    return EXIT_OK


def cmd_detect(config: CliConfig) -> int:
    _, _, graph = _filtered(config)
    dendrogram = run_conga(graph)
    communities = best_cut(dendrogram)
    out = config.out
    assert out is not None
    out.mkdir(parents=True, exist_ok=True)
    dendro_lines = dendrogram_lines(dendrogram)
    comm_lines = communityset_lines(communities)
    (out / "dendrogram.jsonl").write_text(
        "\n".join(dendro_lines) + ("\n" if dendro_lines else ""), encoding="utf-8"
    )
    (out / "communities.jsonl").write_text(
        "\n".join(comm_lines) + ("\n" if comm_lines else ""), encoding="utf-8"
    )
    print(
        f"{len(communities.communities)} communities, "
        f"{len(dendrogram.events)} dendrogram events"
    )
    return EXIT_OK


def cmd_rank(config: CliConfig) -> int:
    _, papers, graph = _filtered(config)
    communities = best_cut(run_conga(graph))
    reports = rank_top_k(communities, papers, config.k)
    print(_format_table(reports))
    if config.out is not None:
        lines = report_lines(reports)
        config.out.write_text(
            "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8"
        )
    return EXIT_OK


def cmd_export(config: CliConfig) -> int:
    dataset, year_from, year_to = _load(config)
    snapshot = build_snapshot(dataset, config.topics, year_from, year_to, config.k)
    text = json.dumps(snapshot, indent=2, ensure_ascii=False, sort_keys=False)
    if config.out is not None:
        config.out.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def cmd_serve(config: CliConfig) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(config.dataset)
    uvicorn.run(app, host="127.0.0.1", port=config.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config(args)
    handlers = {
        "validate": cmd_validate,
        "detect": cmd_detect,
        "rank": cmd_rank,
        "export": cmd_export,
        "serve": cmd_serve,
    }
    try:
        return handlers[config.command](config)
    except InvalidRange as exc:
        print(f"commrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, DatasetError) as exc:
        print(f"commrank: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
