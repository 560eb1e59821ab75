"""
Copyright (c) 2022 Kitsunetic, https://github.com/Kitsunetic

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
THE SOFTWARE.
"""
import argparse
import importlib
from collections.abc import Mapping
from copy import deepcopy
from datetime import datetime
from pathlib import Path

import numpy as np
from easydict import EasyDict
from omegaconf import DictConfig, ListConfig, OmegaConf

from ..errors import UsageError

__all__ = [
    "COMMANDS",
    "instantiate_from_config",
    "get_obj_from_str",
    "load_yaml",
    "build_parser",
    "get_config",
    "save_config",
    "to_plain",
]

COMMANDS = ("generate", "detect", "contour", "reconstruct", "report", "curve")


def instantiate_from_config(config: dict, *args, **kwargs):
    config = deepcopy(config)
    if isinstance(config, (DictConfig, ListConfig)):
        config = OmegaConf.to_container(config, resolve=True)

    if "target" not in config:
        raise UsageError("Expected key `target` to instantiate, got keys {}".format(list(config.keys())))

    params = config.get("params") or dict()
    return get_obj_from_str(config["target"])(*args, **params, **kwargs)


def get_obj_from_str(string):
    module, cls = string.rsplit(".", 1)
    try:
        module_imp = importlib.import_module(module, package=None)
        return getattr(module_imp, cls)
    except (ImportError, AttributeError) as e:
        raise UsageError("Cannot import `{}`: {}".format(string, e)) from e


def _load_yaml_recursive(cfg, base_dir: Path):
    keys_to_del = []
    for k in cfg.keys():
        if k == "__parent__":
            cfg2 = load_yaml(base_dir / cfg[k])
            keys_to_del.append(k)
            cfg = OmegaConf.merge(cfg2, cfg)
        elif isinstance(cfg[k], DictConfig):
            cfg[k] = _load_yaml_recursive(cfg[k], base_dir)

    for k in keys_to_del:
        del cfg[k]

    return cfg


def load_yaml(path):
    """ Load a YAML file, resolving `__parent__` paths relative to the file itself. """
    path = Path(path)
    if not path.is_file():
        raise UsageError("Config file not found: {}".format(path))
    cfg = OmegaConf.load(path)
    return _load_yaml_recursive(cfg, path.parent)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="fourierpos", description="Fourier-positivity detectors on randomized test corpora")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", type=str, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--n", type=int, default=None, help="corpus size")
    parser.add_argument("--detector", type=str, default=None, help="detector name(s), comma separated")
    parser.add_argument("--out", type=str, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--corpus", type=str, default=None)
    parser.add_argument("--index", type=int, default=None, help="record index inside --corpus")
    parser.add_argument("--cv", type=str, default=None, help="comma separated coefficients")
    parser.add_argument("--kind", type=str, default=None)
    parser.add_argument("--K", type=str, default=None, help="comma separated truncation orders")
    parser.add_argument("--verdicts", type=str, nargs="*", default=None)
    parser.add_argument("--debug", action="store_true")
    return parser


def _timestr():
    n = datetime.now()
    return "{}{:02d}{:02d}_{:02d}{:02d}".format(n.year%100, n.month, n.day, n.hour, n.minute)


def get_config(argv=None):
    """
    Parse the command line into `(command, args)`.

    Precedence is YAML file < `key=value` dot-list overrides < explicit flags.
    `args.out_dir` is created; the resolved configuration is not saved here
    so commands can still adjust it.
    """
    parser = build_parser()
    opt, unknown = parser.parse_known_args(argv)

    bad = [u for u in unknown if "=" not in u or u.startswith("-")]
    if bad:
        raise UsageError("Unrecognized arguments: {}".format(" ".join(bad)))

    cfg = load_yaml(opt.config) if opt.config is not None else OmegaConf.create()
    cli = OmegaConf.from_dotlist(unknown)
    args = OmegaConf.merge(cfg, cli)

    for key, value in (("seed", opt.seed), ("n", opt.n), ("num_workers", opt.workers), ("kind", opt.kind)):
        if value is not None:
            args[key] = value
    args.debug = opt.debug

    args = EasyDict(OmegaConf.to_container(args, resolve=True))
    args.command = opt.command
    args.detector_names = opt.detector.split(",") if opt.detector else None
    args.corpus_path = opt.corpus
    args.index = opt.index
    try:
        args.cv = [float(c) for c in opt.cv.split(",")] if opt.cv else None
        args.K_list = [int(k) for k in opt.K.split(",")] if opt.K else None
    except ValueError as e:
        raise UsageError("Bad number list: {}".format(e)) from e
    args.verdict_paths = opt.verdicts

    if opt.out is not None:
        out_dir = Path(opt.out)
    else:
        stem = Path(opt.config).stem if opt.config else "default"
        out_dir = Path(args.get("exp_dir", "runs")) / "{}_{}_{}".format(_timestr(), stem, opt.command)
        if args.debug:
            out_dir = out_dir.with_name(out_dir.name + "_debug")
    out_dir.mkdir(parents=True, exist_ok=True)
    args.out_dir = str(out_dir)

    return opt.command, args


def to_plain(obj):
    """ Nested EasyDict/OrderedDict/tuple/numpy values as plain dicts, lists and scalars OmegaConf accepts. """
    if isinstance(obj, (DictConfig, ListConfig)):
        return OmegaConf.to_container(obj, resolve=True)
    if isinstance(obj, Mapping):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def save_config(args, path):
    with open(path, "w") as f:
        OmegaConf.save(OmegaConf.create(to_plain(args)), f)
