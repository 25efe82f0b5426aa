from ..imports import *

__all__ = ["as_jsonable", "write_json"]


def as_jsonable(x):
    """
    Convert numpy scalars/arrays and objects with `.to_dict()` into plain Python.
    """
    if hasattr(x, "to_dict"):
        return as_jsonable(x.to_dict())
    if isinstance(x, dict):
        return {str(k): as_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [as_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return as_jsonable(x.tolist())
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return x if np.isfinite(x) else str(x)
    return x


def write_json(filepath, obj):
    """
    Write an object as indented JSON with sorted keys.
    """
    with open(filepath, "w") as f:
        json.dump(as_jsonable(obj), f, indent=2, sort_keys=True)
        f.write("\n")
