from collections import OrderedDict
from pathlib import Path

import numpy as np

from ..basis import CoefficientVector, Kind, Label, classify, load_corpus, phi_fn, psi_fn, \
    sample_corpus, save_corpus
from ..detectors import VERDICT_FIELDS, bochner, poisson
from ..errors import DataError, FalsePositiveError, UsageError
from ..utils import default, instantiate_from_config, logger, map_ordered
from ..utils.options import save_config
from . import export
from .report import CorpusReport

__all__ = [
    "validate_config",
    "build_detectors",
    "cmd_generate",
    "cmd_detect",
    "cmd_contour",
    "cmd_reconstruct",
    "cmd_report",
    "cmd_curve",
    "COMMANDS",
]

_THRESHOLDS = ("eps_label", "eps_det", "eps_F")


def _log():
    return logger.get_logger()


def validate_config(args):
    """ Fill defaults and check the ExperimentConfig in place. """
    args.seed = int(default(args.get("seed"), 0))
    args.num_workers = int(default(args.get("num_workers"), 0))
    if args.seed < 0:
        raise UsageError("seed must be >= 0, got {}".format(args.seed))
    try:
        args.kind = Kind.parse(default(args.get("kind"), Kind.HERMITE_1D.value)).value
    except DataError as e:
        raise UsageError(str(e)) from e

    n = args.get("n")
    if n is not None and int(n) < 1:
        raise UsageError("corpus size must be >= 1, got {}".format(n))

    given = args.get("thresholds") or {}
    args.thresholds = {k: float(given.get(k, d)) for k, d in zip(_THRESHOLDS, (1e-12, 1e-9, 1e-10))}
    for key, value in args.thresholds.items():
        if not value > 0:
            raise UsageError("threshold {} must be > 0, got {}".format(key, value))
    return args


def _finish(args):
    save_config(args, Path(args.out_dir) / "config.yaml")


def _config_echo(args):
    return OrderedDict(
        kind=args.kind,
        seed=args.seed,
        n=args.get("n"),
        thresholds=dict(args.thresholds),
    )


def build_detectors(args, names=None):
    specs = args.get("detectors") or {}
    names = names or list(specs.keys())
    if not names:
        raise UsageError("no detectors configured")
    unknown = [n for n in names if n not in specs]
    if unknown:
        raise UsageError("unknown detector(s) {}, configured: {}".format(unknown, list(specs.keys())))
    return OrderedDict((n, instantiate_from_config(specs[n], name=n)) for n in names)


def cmd_generate(args):
    validate_config(args)
    if args.get("n") is None:
        raise UsageError("corpus size is not set, use --n or `n:` in the config")
    log = _log()
    kind = Kind.parse(args.kind)

    log.info("Generating {} {} functions, seed {}".format(args.n, kind.value, args.seed))
    records = sample_corpus(kind, args.n, args.seed, num_workers=args.num_workers,
        eps_label=float(args.thresholds.eps_label), desc="generate")

    path = save_corpus(records, Path(args.out_dir) / "corpus.csv")
    pp = sum(r.label is Label.PP for r in records)
    log.info("Corpus written to {}: total {} pp {} ({:.2f}%) pn {}".format(
        path, len(records), pp, 100.0 * pp / len(records), len(records) - pp))
    _finish(args)
    return path


def _load_records(args):
    path = args.get("corpus_path") or args.get("corpus")
    if not path:
        raise UsageError("--corpus is required")
    records = load_corpus(path)
    if not records:
        raise DataError("corpus {} is empty".format(path))
    return records


def cmd_detect(args):
    """
    Run the selected detectors over a corpus and write one verdict file per
    detector plus the report. A detection on a PP function aborts the run.
    """
    validate_config(args)
    log = _log()
    records = _load_records(args)
    detectors = build_detectors(args, args.get("detector_names"))
    for det in detectors.values():
        det.check_kind(records[0].cv)

    rows_by_name = OrderedDict()
    for name, det in detectors.items():
        log.info("Running {} on {} functions".format(name, len(records)))
        verdicts = map_ordered(det, records, num_workers=args.num_workers, desc=name)
        export.write_verdicts(Path(args.out_dir) / "verdicts_{}.csv".format(name), records, verdicts)

        for i, (rec, v) in enumerate(zip(records, verdicts)):
            if rec.label is Label.PP and v.detected:
                log.fatal("False positive: function {} {} flagged by {} with value {:.6g} at {}".format(
                    i, rec.cv.coeffs, name, v.value, v.witness_str()))
                _finish(args)
                raise FalsePositiveError(rec, v)
        rows_by_name[name] = [dict(zip(VERDICT_FIELDS, v.row(i, r.label))) for i, (r, v) in
            enumerate(zip(records, verdicts))]

    report = CorpusReport.from_rows(rows_by_name, _config_echo(args))
    report.save(Path(args.out_dir) / "report.yaml")
    log.info(report.to_msg())
    _finish(args)
    return report


def cmd_report(args):
    """ Rebuild the report from verdict files alone. """
    validate_config(args)
    paths = args.get("verdict_paths")
    if not paths:
        raise UsageError("--verdicts is required")
    rows_by_name = OrderedDict()
    for p in paths:
        rows = export.read_verdicts(p)
        if not rows:
            raise DataError("verdict file {} is empty".format(p))
        rows_by_name[rows[0]["detector"]] = rows
    report = CorpusReport.from_rows(rows_by_name, _config_echo(args))
    report.save(Path(args.out_dir) / "report.yaml")
    _log().info(report.to_msg())
    _finish(args)
    if report.total_false_positives:
        name, row = next((n, r) for n, rows in rows_by_name.items() for r in rows
            if r["label"] == "pp" and r["detected"])
        _log().fatal("False positive: function {} flagged by {} with value {:.6g} at {}".format(
            row["index"], name, row["value"], row["witness"]))
        raise FalsePositiveError("function {}".format(row["index"]), row)
    return report


def _resolve_function(args):
    """
    The function named by --cv (with --kind) or by --corpus and --index, as
    `(cv, label, seed)`. A corpus record keeps the seed it was drawn with.
    """
    if args.get("cv"):
        try:
            cv = CoefficientVector.normalized(args.kind, args.cv)
        except DataError as e:
            raise UsageError(str(e)) from e
        return cv, classify(cv, float(args.thresholds.eps_label)), args.seed
    records = _load_records(args)
    index = args.get("index")
    if index is None:
        raise UsageError("either --cv or --corpus with --index is required")
    if not 0 <= index < len(records):
        raise UsageError("index {} out of range for {} functions".format(index, len(records)))
    rec = records[index]
    return rec.cv, rec.label, rec.seed


def cmd_contour(args):
    validate_config(args)
    cv, label, _ = _resolve_function(args)
    args.kind = cv.kind.value
    psi = psi_fn(cv)
    c = args.get("contour") or {}
    out = Path(args.out_dir) / "contour.csv"
    if cv.kind is Kind.HERMITE_1D:
        scan = poisson.CharScan1D(c.get("R", poisson.R_1D), **{k: c[k] for k in ("dr_grid", "s_grid") if k in c})
        dr, s, F = poisson.char_grid_1d(psi, scan)
        export.write_grid(out, "dr", "s", dr, s, F)
    else:
        a, g, F = poisson.char_grid_2d(psi, float(c.get("dr", 0.5)), int(c.get("angles", 129)),
            float(c.get("R", poisson.R_RADIAL)))
        export.write_grid(out, "alpha", "gamma", a, g, F)
    _log().info("Contour grid of a {} function written to {}, min F {:.6g}".format(label.value, out, float(F.min())))
    _finish(args)
    return out, float(F.min())


def cmd_reconstruct(args):
    validate_config(args)
    cv, _, _ = _resolve_function(args)
    args.kind = cv.kind.value
    log = _log()
    c = args.get("reconstruct") or {}
    psi, phi = psi_fn(cv), phi_fn(cv)
    radial = cv.kind is Kind.LAGUERRE_RADIAL
    R = float(c.get("R", poisson.R_RADIAL if radial else poisson.R_1D))
    S = float(c.get("S", poisson.S_CUT))
    K_list = args.get("K_list") or list(c.get("K", [40, 80] if radial else [12, 14, 20]))
    s = np.linspace(0.0, float(c.get("s_max", 3.0 if radial else 8.0)), int(c.get("s_steps", 401)))

    exact = phi(s)
    columns = [s]
    for K in K_list:
        r = R / K
        if radial:
            rec = poisson.reconstruct_phi_2d(psi, r, K, s, 0.0, R, S)
        else:
            rec = poisson.reconstruct_phi_1d(psi, r, K, s, R, S)
        columns.append(rec.value)
        log.info("K={} r={:.4g} window_ok={} sup error {:.3e}".format(
            K, r, rec.window_ok, float(np.max(np.abs(rec.value - exact)))))
    columns.append(exact)

    out = Path(args.out_dir) / "reconstruct.csv"
    export.write_csv(out, ["s"] + ["phi_K{}".format(K) for K in K_list] + ["phi_exact"], zip(*columns))
    _finish(args)
    return out


def cmd_curve(args):
    """ lambda_min against r for Toeplitz orders, or against beta for point counts. """
    validate_config(args)
    cv, _, seed = _resolve_function(args)
    args.kind = cv.kind.value
    c = args.get("curve") or {}
    psi = psi_fn(cv)
    method = args.get("eigen_method", "eigh")
    columns, header = [], []
    if cv.kind is Kind.HERMITE_1D:
        for k in c.get("orders", [5, 10]):
            r, lam = bochner.eigen_curve_1d(psi, int(k), c.get("r_grid", bochner.R_GRID), method)
            if not columns:
                columns, header = [r], ["r"]
            columns.append(lam)
            header.append("lambda_k{}".format(k))
    else:
        pool = bochner.point_pool(seed)
        for n in c.get("counts", [20, 40, 60, 80, 100]):
            beta, lam = bochner.eigen_curve_2d(psi, pool[:int(n)], c.get("beta_grid", bochner.BETA_GRID), method)
            if not columns:
                columns, header = [beta], ["beta"]
            columns.append(lam)
            header.append("lambda_n{}".format(n))

    out = Path(args.out_dir) / "curve.csv"
    export.write_csv(out, header, zip(*columns))
    _log().info("Eigenvalue curves written to {}, min {:.6g}".format(out, float(min(np.min(x) for x in columns[1:]))))
    _finish(args)
    return out


COMMANDS = OrderedDict(
    generate=cmd_generate,
    detect=cmd_detect,
    contour=cmd_contour,
    reconstruct=cmd_reconstruct,
    report=cmd_report,
    curve=cmd_curve,
)
