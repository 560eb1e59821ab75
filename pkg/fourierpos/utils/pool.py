import sys
from typing import Callable, Iterable, List, Sequence

import torch
import torch.multiprocessing as mp
from tqdm import tqdm

from . import logger

__all__ = ["map_ordered", "iter_ordered", "get_num_workers"]


def get_num_workers(num_workers=None):
    if num_workers is None:
        return 0
    if num_workers < 0:
        return mp.cpu_count()
    return num_workers


def _init_worker():
    # one BLAS thread per worker, the parallelism is across functions
    torch.set_num_threads(1)
    logger.basic_config(None, lock=True)


def iter_ordered(fn: Callable, items: Sequence, num_workers=0, desc=None, chunksize=8, ncols=128):
    """
    Yield `fn(item)` for every item, in input order.

    With `num_workers <= 1` everything runs in this process; otherwise a spawn
    context pool is used. Results are produced in input order either way, so
    reductions over them do not depend on scheduling.
    """
    num_workers = get_num_workers(num_workers)
    total = len(items) if hasattr(items, "__len__") else None
    pbar = tqdm(total=total, ncols=ncols, file=sys.stdout, desc=desc, leave=False, disable=desc is None)

    try:
        if num_workers <= 1:
            for item in items:
                yield fn(item)
                pbar.update()
        else:
            ctx = mp.get_context("spawn")
            with ctx.Pool(num_workers, initializer=_init_worker) as pool:
                for out in pool.imap(fn, items, chunksize=chunksize):
                    yield out
                    pbar.update()
    finally:
        pbar.close()


def map_ordered(fn: Callable, items: Iterable, num_workers=0, desc=None, chunksize=8) -> List:
    return list(iter_ordered(fn, list(items), num_workers=num_workers, desc=desc, chunksize=chunksize))
