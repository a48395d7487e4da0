"""Common functions for the algorithms: the [records] dictionary
collects what each stage did (time spent, number of integrations,
Newton iterations...) and ends up in the 'diagnostics' field of the
result documents.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


from tanner.utils.structures import merge_dicts


def init_records():
    records = {
        "time": 0,
        "operations": 0,
        "per_stage": [],
    }
    return records


def record_stage(records, stage, t=None, operations=None, **stats):
    if records is None:
        return
    entry = {
        "stage": stage,
        "time" : t,
        "operations": operations,
    }
    if t is not None:
        records["time"] += t
    if operations is not None:
        records["operations"] += operations
    records["per_stage"].append(merge_dicts(entry, stats))


def print_stage(msg, level, text):
    """Print [text] with the stage marker if [msg] >= [level]."""
    if msg >= level:
        print("'-|-,", text)


def print_detail(msg, level, text):
    if msg >= level:
        print("  '->", text)
