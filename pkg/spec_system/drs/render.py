# -*- coding: utf-8 -*-
from .conditions import Disjunction, Drs, IfThen, Negation


def render_term(k: Drs) -> str:
    """
    One-line term form, e.g. drs([X1], [named(X1,simplemat), simple(X1)]).
    """
    return str(k)


def render_box(k: Drs, indent: int = 0, inherited: tuple = ()) -> str:
    """
    Indented box form used by the dialog's :drs command.
    """
    pad = ' ' * indent
    universe = ','.join(str(referent) for referent in (*k.referents, *inherited))
    lines = [f"{pad}[{universe}]"]
    for condition in k.conditions:
        if isinstance(condition, IfThen):
            lines.append(f"{pad}  IF")
            lines.append(render_box(condition.antecedent, indent + 4))
            lines.append(f"{pad}  THEN")
            lines.append(render_box(condition.consequent, indent + 4, condition.antecedent.referents))
        elif isinstance(condition, Negation):
            lines.append(f"{pad}  NOT")
            lines.append(render_box(condition.drs, indent + 4))
        elif isinstance(condition, Disjunction):
            lines.append(render_box(condition.left, indent + 4))
            lines.append(f"{pad}  OR")
            lines.append(render_box(condition.right, indent + 4))
        else:
            lines.append(f"{pad}  {condition}")
    return '\n'.join(lines)
