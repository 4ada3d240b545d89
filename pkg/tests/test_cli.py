import json

import numpy as np
import pytest

from agbench.cli import main
from agbench.manifest import load_manifest


@pytest.fixture(scope="module")
def demo_mnist(tmp_path_factory):
    out = tmp_path_factory.mktemp("mnist_src")
    assert main(["demo-data", "--kind", "mnist", "--out", str(out),
                 "--n", "60", "--seed", "4"]) == 0
    return out


@pytest.fixture(scope="module")
def demo_silhouettes(tmp_path_factory):
    out = tmp_path_factory.mktemp("sil_src")
    assert main(["demo-data", "--kind", "silhouettes", "--out", str(out),
                 "--per-class", "2", "--size", "48", "--seed", "4"]) == 0
    return out


def test_demo_mnist_is_idx(demo_mnist):
    from agbench.inputs import load_mnist_dir

    data = load_mnist_dir(demo_mnist)
    assert len(data) == 60
    assert data.image_shape == (28, 28)


def test_gen_mnist_default_grid(demo_mnist, tmp_path):
    out = tmp_path / "bench"
    assert main(["gen", "--dataset", "mnist", "--input", str(demo_mnist),
                 "--out", str(out)]) == 0
    manifest = load_manifest(out)
    assert [(c.direction, c.interval) for c in manifest.conditions] == [
        ("horizontal", 2), ("horizontal", 4), ("horizontal", 6), ("horizontal", 8),
    ]
    assert manifest.total_stimuli == 4 * 60


def test_gen_rejects_odd_interval(demo_mnist, tmp_path):
    code = main(["gen", "--dataset", "mnist", "--input", str(demo_mnist),
                 "--out", str(tmp_path / "x"), "--intervals", "3"])
    assert code == 2


def test_gen_human_subset_disjoint(demo_mnist, tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    base = ["gen", "--dataset", "mnist", "--input", str(demo_mnist),
            "--directions", "h", "--intervals", "4",
            "--human-subset", "--per-class", "2"]
    assert main(base + ["--seed", "1", "--out", str(first)]) == 0
    assert main(base + ["--seed", "2", "--out", str(second),
                        "--exclude-manifest", str(first / "manifest.json")]) == 0
    a = set(load_manifest(first).source_indices)
    b = set(load_manifest(second).source_indices)
    assert len(a) == len(b) == 20
    assert not a & b


def test_gen_score_summarize_silhouettes(demo_silhouettes, tmp_path):
    bench = tmp_path / "bench"
    assert main(["gen", "--dataset", "silhouettes", "--input", str(demo_silhouettes),
                 "--directions", "h,v", "--intervals", "4,6",
                 "--out", str(bench)]) == 0
    manifest = load_manifest(bench)
    assert len(manifest.conditions) == 4
    assert manifest.params["figure_is_dark"] is True

    # predictions: always the coarse-correct fine class for h_4, garbage elsewhere
    from agbench.synthetic import synthetic_class_map

    cmap = synthetic_class_map(seed=0)
    by_coarse = {}
    for fine, coarse in cmap.entries.items():
        by_coarse.setdefault(coarse, fine)
    lines = ["stimulus_id,fine_class"]
    for cond in manifest.conditions:
        for item in cond.items:
            fine = by_coarse[item.label] if cond.dir == "h_4" else by_coarse[(item.label + 1) % 16]
            lines.append(f"{item.id},{fine}")
    pred_path = tmp_path / "resnet_fake.csv"
    pred_path.write_text("\n".join(lines) + "\n")

    cmap_path = tmp_path / "classmap.csv"
    rows = ["fine_index,category"]
    rows += [f"{fine},{cmap.category_names[coarse]}" for fine, coarse in cmap.entries.items()]
    cmap_path.write_text("\n".join(rows) + "\n")

    results_path = tmp_path / "results.json"
    assert main(["score", "--truth", str(bench), "--pred", str(pred_path),
                 "--classmap", str(cmap_path), "--out", str(results_path)]) == 0
    doc = json.loads(results_path.read_text())
    assert doc["model_name"] == "resnet_fake"
    by_dir = {(r["direction"], r["interval"]): r["accuracy"] for r in doc["results"]}
    assert by_dir[("horizontal", 4)] == 1.0
    assert by_dir[("vertical", 6)] == 0.0

    hist_path = tmp_path / "hist.json"
    assert main(["summarize", "--results", str(results_path),
                 "--bin", "0.05", "--out", str(hist_path)]) == 0
    hist = json.loads(hist_path.read_text())
    assert hist["random_guess"] == 0.0625
    assert hist["outliers"]["models"] == ["resnet_fake"]


def test_score_missing_prediction_fails(demo_mnist, tmp_path):
    bench = tmp_path / "bench"
    main(["gen", "--dataset", "mnist", "--input", str(demo_mnist),
          "--directions", "h", "--intervals", "4", "--out", str(bench)])
    pred = tmp_path / "p.csv"
    pred.write_text("stimulus_id,fine_class\nh_4/0000_0,0\n")
    code = main(["score", "--truth", str(bench), "--pred", str(pred),
                 "--out", str(tmp_path / "r.json")])
    assert code == 2


def test_probe_cli(tmp_path, rng):
    from agbench.pngio import write_png_file
    from agbench.probe import save_weight_bundle

    from .test_weights import make_bundle

    bundle = make_bundle(np.random.default_rng(3), channels=8, in_channels=3, k=3)
    save_weight_bundle(bundle, tmp_path / "w.json")
    write_png_file(tmp_path / "stim.png", rng.random((32, 32)))
    out = tmp_path / "maps"
    assert main(["probe", "--weights", str(tmp_path / "w.json"),
                 "--image", str(tmp_path / "stim.png"),
                 "--out", str(out), "--tap", "bn", "--per-filter"]) == 0
    assert (out / "bn_average.png").exists()
    assert (out / "bn_average.json").exists()
    assert len(list(out.glob("bn_filter_*.png"))) == 8
