import os

DEFAULT_CAPS = {
    # enumeration of ring elements
    "elements": 2 ** 20,
    # full-scan radical
    "radical_scan": 2 ** 16,
    # brute-force oracles
    "oracle_ring": 256,
    "oracle_module": 64,
    "oracle_radical": 4096,
    "oracle_socle": 4096,
}

CAPS = dict(DEFAULT_CAPS)


def get_cap(name):
    if name == "elements" and "RINGFORGE_CAP_ELEMENTS" in os.environ:
        return int(os.environ["RINGFORGE_CAP_ELEMENTS"])
    return CAPS[name]


def set_caps(**values):
    for name, value in values.items():
        if name not in DEFAULT_CAPS:
            raise KeyError(f"unknown cap {name!r}; known: {', '.join(DEFAULT_CAPS)}")
        CAPS[name] = int(value)


def reset_caps():
    CAPS.clear()
    CAPS.update(DEFAULT_CAPS)
