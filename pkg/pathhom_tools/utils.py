import sys
import typing as t
import contextlib

import tqdm
import tqdm.contrib

from . import preferences


T = t.TypeVar('T')


def verbose_print(*args: t.Any):
    """Prints to stderr, if the verbose setting is enabled.

    :args: Arguments to internal print() call.
    """
    if preferences.get_preferences().verbose:
        print(*args, file=sys.stderr)


@contextlib.contextmanager
def std_out_err_redirect_tqdm():
    """Redirect stdout and stderr for tqdm.
    """
    orig_out_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = map(tqdm.contrib.DummyTqdmFile, orig_out_err)
        yield orig_out_err[1]
    finally:
        sys.stdout, sys.stderr = orig_out_err


def progress(iterable: t.Iterable[T], total: t.Optional[int] = None, desc: str = '') -> t.Iterable[T]:
    """Wraps an iterable into a tqdm bar when progress bars are enabled.

    :param iterable: Work items.
    :param total: Number of items, if known.
    :param desc: Bar label.
    :return: The iterable itself, or a tqdm wrapper around it.
    """
    if not preferences.get_preferences().progress:
        return iterable

    return _progress_redirected(iterable, total, desc)


def _progress_redirected(iterable: t.Iterable[T], total: t.Optional[int], desc: str) -> t.Iterator[T]:
    with std_out_err_redirect_tqdm() as orig_stderr:
        yield from tqdm.tqdm(iterable, total=total, desc=desc, file=orig_stderr, dynamic_ncols=True, ascii=True,
                             leave=False)


