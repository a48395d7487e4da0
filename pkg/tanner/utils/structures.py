"""Functions that facilitate the manipulations of basic data structures.
"""


__author__ = "Rémi Barat"
__version__ = "1.0"


def merge_dicts(*dicts):
    """Return a dict whose keys are all the keys in the dict given,
    and the values are the value for the last dict given.

    Example:
    >>> merge_dicts(
    ...     {"a": 0, "b": 1},
    ...     {"a": 2, "c": 2}
    ... )
    {'a': 2, 'b': 1, 'c': 2}
    """
    res = {}
    for d in dicts:
        res.update(d)
    return res


def expand_dotted(flat):
    """Turn the keys written 'block.key' into nested dicts. Values that
    already are dicts are merged recursively.

    Example:
    >>> expand_dotted({"basin.n_prey": 40, "basin": {"n_predator": 20}})
    {'basin': {'n_prey': 40, 'n_predator': 20}}
    """
    res = {}
    for key, val in flat.items():
        path = str(key).split(".")
        node = res
        for k in path[:-1]:
            node = node.setdefault(k, {})
            if not isinstance(node, dict):
                raise KeyError(key)
        if isinstance(val, dict):
            val = expand_dotted(val)
            if isinstance(node.get(path[-1]), dict):
                val = merge_dicts(node[path[-1]], val)
        node[path[-1]] = val
    return res


def to_builtin(obj):
    """Recursively convert numpy scalars/arrays and tuples into plain
    Python values (what json and yaml know how to write).
    """
    if isinstance(obj, dict):
        return {str(k): to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_builtin(v) for v in obj]
    if hasattr(obj, "tolist"):
        return to_builtin(obj.tolist())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, float):
        return float(obj)
    return obj
