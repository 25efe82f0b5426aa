"""
A log of the actions that made and analyzed a `SLAMData`.

Each entry keeps the action and its inputs already written as
Python source, so `history()` can print a chain that rebuilds the
same responses when pasted back in.
"""
from ...imports import *
from ...patterns import PatternSet, QMatrix
from ...screening import ScreenResult

__all__ = [
    "_setup_history",
    "_record_history_entry",
    "_remove_last_history_entry",
    "_create_history_entry",
    "history",
]

# actions that create a dataset, rather than being called on one
CONSTRUCTORS = ["SLAMData", "SimulatedSLAMData"]


def _setup_history(self):
    self.metadata["history"] = []


def _record_history_entry(self, entry):
    """
    Append an entry from `_create_history_entry` to the log.
    """
    self.metadata["history"].append(entry)


def _remove_last_history_entry(self):
    """
    Drop the most recent entry (a subclass replacing its parent's).
    """
    if self.metadata.get("history"):
        self.metadata["history"].pop()
    else:
        self.metadata["history"] = []


def represent_as_copypasteable(x):
    """
    Write an input as Python source that evaluates back to it
    after `from slamlearn import *`.

    Responses, patterns and Q-matrices are written out in full.
    A screening result is written as its candidate patterns,
    which is all that fitting uses from it.
    """
    if isinstance(x, np.ndarray):
        return f"np.{repr(x)}"
    if isinstance(x, ScreenResult):
        x = x.a_screen
    if isinstance(x, PatternSet):
        return f"PatternSet({x.strings()!r}, K={x.K})"
    if isinstance(x, QMatrix):
        return f"QMatrix({x.entries.tolist()!r})"
    if isinstance(x, slice):
        return f"slice({x.start!r}, {x.stop!r}, {x.step!r})"
    return repr(x)


def _create_history_entry(self, action, inputs={}):
    """
    Describe one action from the `locals()` of the method doing it.

    Parameters
    ----------
    action : str
        The method (or constructor) name.
    inputs : dict
        Its arguments; `self`, unset ones and an empty `**kw`
        are left out, and a filled `**kw` is spread out.

    Returns
    -------
    entry : dict
        The action and a {keyword: source} dictionary of its inputs.
    """
    keywords = {
        k: v for k, v in inputs.items() if k not in ("self", "kw") and v is not None
    }
    keywords.update(inputs.get("kw") or {})
    return dict(
        action=action,
        inputs={k: represent_as_copypasteable(v) for k, v in keywords.items()},
    )


def _render(entry):
    arguments = "".join(f"\n   {k}={v}," for k, v in entry["inputs"].items())
    prefix = "" if entry["action"] in CONSTRUCTORS else "."
    return f"{prefix}{entry['action']}({arguments.rstrip(',')})"


def history(self):
    """
    Summarize the actions applied to this dataset since it was made.

    Returns
    -------
    history : str
        One call per line in parentheses. Up to the first analysis
        action (`.fit`, `.path`, ...) it evaluates back to an
        equal dataset.
    """
    return "(\n" + "\n".join(_render(e) for e in self.metadata["history"]) + "\n)"
