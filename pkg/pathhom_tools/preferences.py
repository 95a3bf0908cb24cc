import contextlib
import dataclasses
import typing as t


@dataclasses.dataclass(frozen=True)
class Preferences:
    """Package-wide settings. Per-call keyword arguments always take precedence over these.
    """

    #: Print diagnostic messages to stderr.
    verbose: bool = False

    #: Keep full tracebacks in the command line instead of short error messages.
    debug: bool = False

    #: Show tqdm progress bars for batch work.
    progress: bool = False

    #: Maximal number of allowed elementary paths enumerated per dimension.
    path_budget: int = 2_000_000

    #: Maximal size |V_H|^|V_G| of a map space searched exhaustively.
    map_space_cap: int = 10 ** 6

    #: Maximal number of maps visited by a budgeted homotopy search.
    homotopy_budget: int = 100_000

    #: Maximal number of words expanded by the loop equivalence search.
    loop_max_steps: int = 100_000


_preferences = Preferences()


def get_preferences() -> Preferences:
    """Returns the active preferences.

    :return: Preferences.
    """
    return _preferences


def set_preferences(**changes: t.Any) -> Preferences:
    """Replaces the active preferences with a modified copy.

    :raises KeyError: Raised when an unknown setting is passed.
    :return: The new preferences.
    """
    global _preferences  # pylint: disable=global-statement

    fields = {field.name for field in dataclasses.fields(Preferences)}
    if unknown := set(changes) - fields:
        raise KeyError(f"Unknown preferences: {', '.join(sorted(unknown))}")

    _preferences = dataclasses.replace(_preferences, **changes)
    return _preferences


@contextlib.contextmanager
def override_preferences(**changes: t.Any) -> t.Iterator[Preferences]:
    """Temporarily modify the active preferences.

    :raises KeyError: Raised when an unknown setting is passed.
    """
    global _preferences  # pylint: disable=global-statement

    previous = _preferences
    try:
        yield set_preferences(**changes)
    finally:
        _preferences = previous
