"""CLI: convert raw e-texts to tagged-token interchange files."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import IngestError
from .pipeline import IngestJob, append_manifest, ingest


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ingest",
        description="Convert a raw e-text into a tagged-token interchange file",
    )
    parser.add_argument("--version", action="version",
                        version=f"textingest {__version__}")
    parser.add_argument("--in", dest="source", required=True, metavar="PATH",
                        help="plain-text source file")
    parser.add_argument("--id", dest="work_id", required=True, metavar="CODE",
                        help="work identifier (e.g. twa08)")
    parser.add_argument("--out", dest="out_path", required=True, metavar="PATH",
                        help="interchange file to write")
    parser.add_argument("--no-strip", action="store_true",
                        help="skip boilerplate marker stripping")
    parser.add_argument("--tagger", choices=("builtin", "nltk"),
                        default="builtin", help="POS tagger backend")
    parser.add_argument("--title", default="", help="work title for the manifest")
    parser.add_argument("--append-manifest", metavar="PATH",
                        help="append an id<TAB>path<TAB>title line here")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = IngestJob(
        source=Path(args.source),
        work_id=args.work_id,
        out_path=Path(args.out_path),
        strip=not args.no_strip,
        tagger=args.tagger,
        title=args.title,
    )
    try:
        out = ingest(job)
    except IngestError as err:
        print(json.dumps({"error": type(err).__name__, "message": str(err)}),
              file=sys.stderr)
        return 1
    if args.append_manifest:
        append_manifest(Path(args.append_manifest), args.work_id, out, args.title)
    print(json.dumps({"id": args.work_id, "out": str(out)}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
