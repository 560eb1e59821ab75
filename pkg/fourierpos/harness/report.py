from collections import OrderedDict
from pathlib import Path

from omegaconf import OmegaConf

from ..errors import DataError
from ..utils import RateMeters
from ..utils.options import to_plain

__all__ = ["REFERENCE_RATES", "REFERENCE_PP_FRACTION", "CorpusReport"]

# reference values, printed next to ours for comparison
REFERENCE_RATES = {
    "toeplitz5": 0.69,
    "toeplitz10": 0.86,
    "poisson1d": 1.0 - 19 / 11068,
    "points20": 0.20,
    "points80": 0.40,
    "poisson2d": 0.90,
}
REFERENCE_PP_FRACTION = {
    "hermite1d": 4388 / 15456,
    "radial2d": 185 / 10079,
}


class CorpusReport:
    """
    Counts and detection rates of a corpus run.

    Rates are over the PN subset; detections on PP functions are counted
    separately as false positives and never enter the rates.
    """

    def __init__(self, labels, config=None) -> None:
        self.labels = [getattr(l, "value", l) for l in labels]
        self.total = len(self.labels)
        self.pp = sum(1 for l in self.labels if l == "pp")
        self.pn = self.total - self.pp
        self.config = dict(config or {})
        self.meters = RateMeters()
        self.false_positives = OrderedDict()
        self.orders = OrderedDict()

    def add(self, name, rows):
        """ `rows`: verdict rows (dicts with label, detected, order) in corpus order. """
        rows = list(rows)
        if len(rows) != self.total:
            raise DataError("detector {} has {} verdicts for {} functions".format(name, len(rows), self.total))
        meter = self.meters[name]
        fp = 0
        for label, row in zip(self.labels, rows):
            if getattr(row["label"], "value", row["label"]) != label:
                raise DataError("verdicts of {} do not follow the corpus order".format(name))
            if label == "pn":
                meter.update(bool(row["detected"]))
            elif row["detected"]:
                fp += 1
        self.false_positives[name] = fp
        self.orders[name] = rows[0]["order"] if rows and rows[0]["order"] != "" else None

    @classmethod
    def from_rows(cls, rows_by_name, config=None):
        names = list(rows_by_name)
        if not names:
            raise DataError("no verdicts to report on")
        report = cls([r["label"] for r in rows_by_name[names[0]]], config)
        for name in names:
            report.add(name, rows_by_name[name])
        return report

    @property
    def total_false_positives(self):
        return sum(self.false_positives.values())

    def detections(self, name):
        return self.meters[name].hits

    def misses(self, name):
        return self.pn - self.meters[name].hits

    def rate(self, name):
        return self.meters[name].rate

    def to_dict(self):
        kind = self.config.get("kind")
        out = dict(
            counts=dict(total=self.total, pp=self.pp, pn=self.pn,
                pp_fraction=self.pp / self.total if self.total else 0.0,
                reference_pp_fraction=REFERENCE_PP_FRACTION.get(kind)),
            detectors=dict(),
            config=to_plain(self.config),
        )
        for name in self.meters.keys():
            m = self.meters[name]
            out["detectors"][name] = dict(
                order=self.orders.get(name),
                detections=m.hits,
                misses=self.misses(name),
                false_positives=self.false_positives[name],
                rate=m.rate,
                stderr=m.stderr,
                reference_rate=REFERENCE_RATES.get(name),
            )
        return out

    def save(self, path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            OmegaConf.save(OmegaConf.create(to_plain(self.to_dict())), f)
        return path

    def to_msg(self):
        parts = ["total:{} pp:{} pn:{}".format(self.total, self.pp, self.pn)]
        for name in self.meters.keys():
            m = self.meters[name]
            parts.append("{}:{:.2f}%+-{:.2f} fp:{}".format(name, 100 * m.rate, 100 * m.stderr,
                self.false_positives[name]))
        return " ".join(parts)
