import pytest

from pathhom_tools import preferences, utils


def test_override_restores_previous():
    before = preferences.get_preferences()

    with preferences.override_preferences(verbose=True, map_space_cap=5) as active:
        assert active.verbose
        assert preferences.get_preferences().map_space_cap == 5

    assert preferences.get_preferences() == before


def test_override_restores_after_errors():
    before = preferences.get_preferences()

    with pytest.raises(RuntimeError):
        with preferences.override_preferences(path_budget=3):
            raise RuntimeError

    assert preferences.get_preferences() == before


def test_unknown_setting():
    with pytest.raises(KeyError):
        with preferences.override_preferences(colour=True):
            pass


def test_verbose_print(capsys):
    utils.verbose_print("hidden")

    with preferences.override_preferences(verbose=True):
        utils.verbose_print("shown")

    assert capsys.readouterr().err == "shown\n"


def test_progress_passthrough():
    items = [1, 2, 3]
    assert utils.progress(items) is items

    with preferences.override_preferences(progress=True):
        assert list(utils.progress(items, total=3, desc='test')) == items
