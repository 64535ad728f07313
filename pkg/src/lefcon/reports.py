"""Deterministic key-value report trees.

Reports render as two-space-indented `key: value` lines in insertion
order; rationals always print as numerator/denominator with positive
denominator, so identical inputs produce byte-identical reports.
"""

from fractions import Fraction


class Tree(list):
    """An ordered list of (key, value) pairs rendered as a nested block."""


def format_scalar(value):
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, tuple):
        return "(%s)" % " ".join(format_scalar(v) for v in value)
    return str(value)


def render_report(tree):
    lines = []

    def walk(node, indent):
        pad = "  " * indent
        for key, value in node:
            if isinstance(value, Tree):
                lines.append("%s%s:" % (pad, key))
                walk(value, indent + 1)
            elif isinstance(value, list):
                lines.append(
                    "%s%s: [%s]"
                    % (pad, key, ", ".join(format_scalar(v) for v in value))
                )
            else:
                lines.append("%s%s: %s" % (pad, key, format_scalar(value)))

    walk(tree, 0)
    return "\n".join(lines) + "\n"
