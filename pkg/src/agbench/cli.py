"""agbench command line.

Subcommands:
    gen        generate an abutting-grating benchmark from a source dataset
    score      score a prediction CSV against a generated benchmark
    summarize  histogram + outliers over scored results
    probe      activation maps of a conv stem over one stimulus
    serve      run the human-study web service
    demo-data  write synthetic source datasets in the real input formats
"""

from __future__ import annotations

import argparse
import glob
import json
import sys
from pathlib import Path

from . import __version__
from .benchgen import (
    ALL_DIRECTIONS,
    CODE_DIRECTIONS,
    ConditionGrid,
    GeneratorConfig,
    generate,
    sample_human_subset,
)
from .classmap import load_class_map
from .inputs import load_mnist_dir, load_silhouette_dir
from .manifest import load_manifest
from .scoring import outliers, read_predictions_file, score_manifest, summarize

DATASET_CHOICES = ("mnist", "mnist-hires", "silhouettes")


def _dataset_key(name: str) -> str:
    return name.replace("-", "_")


def _parse_directions(text: str) -> tuple[str, ...]:
    names = []
    for code in text.split(","):
        code = code.strip().lower()
        if code in CODE_DIRECTIONS:
            names.append(CODE_DIRECTIONS[code])
        elif code in ALL_DIRECTIONS:
            names.append(code)
        else:
            raise argparse.ArgumentTypeError(f"unknown direction {code!r} (use h,v,ul,ur)")
    return tuple(names)


def _parse_intervals(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad interval list {text!r}")


def cmd_gen(args) -> int:
    dataset_key = _dataset_key(args.dataset)
    if dataset_key == "silhouettes":
        source = load_silhouette_dir(args.input)
    else:
        source = load_mnist_dir(args.input)

    default_grid = ConditionGrid.default_for(dataset_key)
    grid = ConditionGrid(
        dataset=dataset_key,
        directions=args.directions or default_grid.directions,
        intervals=args.intervals or default_grid.intervals,
    )

    config = GeneratorConfig.for_dataset(dataset_key)
    config.threshold = args.threshold
    config.figure_phase = args.figure_phase
    config.write_idx = args.idx
    if args.figure_is_dark is not None:
        config.figure_is_dark = args.figure_is_dark
    if args.polarity is not None:
        config.polarity = args.polarity
    if args.kernel is not None:
        config.kernel = args.kernel

    source_indices = None
    if args.human_subset:
        exclude = None
        if args.exclude_manifest:
            prior = load_manifest(args.exclude_manifest)
            if not prior.source_indices:
                raise SystemExit(
                    f"{args.exclude_manifest} records no source indices to exclude"
                )
            exclude = prior.source_indices
        source, source_indices = sample_human_subset(
            source, seed=args.seed, per_class=args.per_class, exclude=exclude,
        )

    manifest = generate(source, grid, args.out, config=config, seed=args.seed,
                        source_indices=source_indices)
    print(f"wrote {manifest.total_stimuli} stimuli in {len(manifest.conditions)} "
          f"conditions to {args.out}")
    return 0


def cmd_score(args) -> int:
    manifest = load_manifest(args.truth)
    predictions = read_predictions_file(args.pred, model_name=args.model)
    class_map = None
    if args.classmap:
        class_map = load_class_map(Path(args.classmap).read_text(encoding="utf-8"))
    results = score_manifest(predictions, manifest, class_map, condition=args.condition)
    doc = {
        "model_name": predictions.model_name,
        "unmapped_policy": "incorrect",
        "results": [r.to_dict() for r in results],
    }
    Path(args.out).write_text(json.dumps(doc, indent=2), encoding="utf-8")
    for r in results:
        print(f"{r.direction}/{r.interval}: {r.correct}/{r.n} = {r.accuracy:.4f}")
    return 0


def cmd_summarize(args) -> int:
    from .scoring import ConditionResult

    paths = []
    for pattern in args.results:
        matched = sorted(glob.glob(pattern))
        paths.extend(matched if matched else [pattern])
    results = []
    for path in paths:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        for row in doc["results"]:
            results.append(ConditionResult(
                model_name=row["model_name"], dataset=row["dataset"],
                direction=row["direction"], interval=row["interval"],
                correct=row["correct"], n=row["n"],
            ))
    doc = summarize(results, bin_width=args.bin)
    doc["outliers"] = {
        "threshold": args.outlier_threshold,
        "models": outliers(results, threshold=args.outlier_threshold),
    }
    Path(args.out).write_text(json.dumps(doc, indent=2), encoding="utf-8")
    print(f"summarized {len(results)} results from {len(paths)} files into {args.out}")
    return 0


def cmd_probe(args) -> int:
    from .pngio import load_png_file
    from .probe import (
        average_activation_map,
        export_maps,
        load_weight_bundle,
        per_filter_maps,
        run_stem,
    )

    bundle = load_weight_bundle(args.weights)
    image = load_png_file(args.image)
    taps = run_stem(image, bundle)
    features = taps[args.tap]

    out = Path(args.out)
    mean = features.mean(axis=0)
    export_maps(out, [average_activation_map(features)], prefix=f"{args.tap}_average",
                raw_ranges=[(mean.min(), mean.max())])
    if args.per_filter:
        lo, hi = float(features.min()), float(features.max())
        export_maps(out, per_filter_maps(features), prefix=f"{args.tap}_filter",
                    raw_ranges=[(lo, hi)] * features.shape[0])
    print(f"wrote {args.tap} maps for {args.image} to {out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .study import create_app

    ui_dir = args.ui
    if ui_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = bundled if (bundled / "index.html").exists() else None
    app = create_app(args.store, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def cmd_demo_data(args) -> int:
    from .idx import write_idx_images, write_idx_labels
    from .pngio import write_png_file
    from .synthetic import synthetic_mnist, synthetic_silhouettes

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.kind == "mnist":
        data = synthetic_mnist(args.n, seed=args.seed)
        (out / "images-idx3-ubyte").write_bytes(write_idx_images(data.images))
        (out / "labels-idx1-ubyte").write_bytes(write_idx_labels(data.labels))
    else:
        data = synthetic_silhouettes(per_class=args.per_class, seed=args.seed,
                                     size=args.size)
        counters: dict[int, int] = {}
        for image, label in zip(data.images, data.labels):
            name = data.class_names[label]
            counters[label] = counters.get(label, 0) + 1
            write_png_file(out / f"{name}{counters[label]}.png", image)
    print(f"wrote synthetic {args.kind} ({len(data)} items) to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agbench", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"agbench {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an abutting-grating benchmark")
    p.add_argument("--dataset", required=True, choices=DATASET_CHOICES)
    p.add_argument("--input", required=True, help="source dataset path")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--directions", type=_parse_directions, default=None,
                   help="comma list of h,v,ul,ur (default: dataset grid)")
    p.add_argument("--intervals", type=_parse_intervals, default=None,
                   help="comma list of even pixel intervals (default: dataset grid)")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--figure-phase", type=int, default=0)
    p.add_argument("--polarity", choices=("lines_white_on_black", "lines_black_on_white"),
                   default=None, help="line polarity (default: dataset convention)")
    p.add_argument("--kernel", choices=("nearest", "bilinear"), default=None,
                   help="interpolation kernel for mnist-hires")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--idx", action="store_true",
                   help="also write IDX image/label files per condition")
    p.add_argument("--figure-is-dark", action=argparse.BooleanOptionalAction,
                   default=None, help="figure is the dark region (default: dataset convention)")
    p.add_argument("--human-subset", action="store_true",
                   help="sample the human-study subset (per-class items) before corrupting")
    p.add_argument("--per-class", type=int, default=10)
    p.add_argument("--exclude-manifest", default=None,
                   help="manifest whose source indices must not be resampled")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("score", help="score a prediction CSV against a benchmark")
    p.add_argument("--truth", required=True, help="generated benchmark directory")
    p.add_argument("--pred", required=True, help="CSV of stimulus_id,fine_class")
    p.add_argument("--classmap", default=None, help="fine_index,category CSV")
    p.add_argument("--condition", default=None, help="score one condition, e.g. h_4")
    p.add_argument("--model", default=None, help="model name (default: file stem)")
    p.add_argument("--out", required=True, help="results JSON path")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("summarize", help="histogram scored results")
    p.add_argument("--results", required=True, nargs="+",
                   help="results JSON files or globs")
    p.add_argument("--bin", type=float, default=0.05)
    p.add_argument("--outlier-threshold", type=float, default=0.20)
    p.add_argument("--out", required=True, help="histogram JSON path")
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("probe", help="export conv-stem activation maps")
    p.add_argument("--weights", required=True, help="weight bundle manifest JSON")
    p.add_argument("--image", required=True, help="stimulus PNG")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--tap", choices=("conv", "bn", "relu", "pool"), default="bn")
    p.add_argument("--per-filter", action="store_true",
                   help="also export globally normalized per-filter maps")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("serve", help="serve the human study")
    p.add_argument("--store", required=True, help="benchmark store directory")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", default=None, help="built UI directory to serve at /")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("demo-data", help="write synthetic source datasets")
    p.add_argument("--kind", required=True, choices=("mnist", "silhouettes"))
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, default=400, help="mnist image count")
    p.add_argument("--per-class", type=int, default=10, help="silhouettes per category")
    p.add_argument("--size", type=int, default=224, help="silhouette image size")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_demo_data)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
