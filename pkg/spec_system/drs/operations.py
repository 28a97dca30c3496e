# -*- coding: utf-8 -*-
from typing import Iterator

from spec_system.decorators import logged_stage
from spec_system.exceptions import DuplicateReferent

from .conditions import Atomic, Disjunction, Drs, Equality, Gender, IfThen, Negation, Number, Referent


# A sub-DRS position: one (condition index, role) step per level of nesting.
BoxPath = tuple[tuple[int, str], ...]


def sub_drs_at(k: Drs, path: BoxPath) -> Drs:
    """
    The sub-DRS at a position.

    :raises ValueError: If the path does not address a sub-DRS
    """
    box = k
    for index, role in path:
        try:
            condition = box.conditions[index]
        except IndexError:
            raise ValueError(f"No condition {index} at {path}")
        box = dict(getattr(condition, 'boxes', ())).get(role)
        if box is None:
            raise ValueError(f"Condition {index} has no '{role}' box")
    return box


def replace_sub_drs(k: Drs, path: BoxPath, new_box: Drs) -> Drs:
    """
    Copy of k with the sub-DRS at 'path' replaced.
    """
    if not path:
        return new_box
    (index, role), rest = path[0], path[1:]
    condition = k.conditions[index]
    inner = replace_sub_drs(dict(condition.boxes)[role], rest, new_box)
    if isinstance(condition, Negation):
        updated = Negation(inner)
    elif isinstance(condition, IfThen):
        updated = IfThen(inner, condition.consequent) if role == 'antecedent' else IfThen(condition.antecedent, inner)
    else:
        updated = Disjunction(inner, condition.right) if role == 'left' else Disjunction(condition.left, inner)
    return k.replace_condition(index, updated)


def iter_boxes(k: Drs, path: BoxPath = ()) -> Iterator[tuple[BoxPath, Drs]]:
    """
    Every box of k with its position, outermost first.
    """
    yield path, k
    for index, condition in enumerate(k.conditions):
        for role, box in getattr(condition, 'boxes', ()):
            yield from iter_boxes(box, (*path, (index, role)))


def box_chain(k: Drs, path: BoxPath) -> list[tuple[BoxPath, Drs]]:
    """
    The box at 'path' followed by every box superordinate to it, innermost first.
    A consequent is preceded in the chain by its antecedent.
    """
    chain = [((), k)]
    box = k
    current: BoxPath = ()
    for index, role in path:
        condition = box.conditions[index]
        boxes = dict(condition.boxes)
        if role == 'consequent':
            chain.append(((*current, (index, 'antecedent')), boxes['antecedent']))
        current = (*current, (index, role))
        box = boxes[role]
        chain.append((current, box))
    return list(reversed(chain))


def declared_referents(k: Drs) -> list[Referent]:
    """
    Referents declared in any box of k, in box order.
    """
    return [referent for _, box in iter_boxes(k) for referent in box.referents]


def merge(k: Drs, increment: Drs) -> Drs:
    """
    Extend a discourse DRS with the increment of the next sentence.

    :param k: Discourse so far
    :param increment: Sentence DRS whose referents are fresh with respect to k
    :return: Union of referents and conditions, sentence order kept
    :raises DuplicateReferent: If the increment redeclares a referent of k
    """
    known = {referent.id for referent in declared_referents(k)}
    clashes = sorted({referent.id for referent in declared_referents(increment)} & known)
    if clashes:
        raise DuplicateReferent(clashes)
    return Drs((*k.referents, *increment.referents), (*k.conditions, *increment.conditions))


def accessible_referents(context: Drs, at: BoxPath = ()) -> list[Referent]:
    """
    Referents an anaphor at position 'at' may refer to.

    Referents of the current box come first, then those of each superordinate
    box; within one box the most recently introduced come first.
    """
    result: list[Referent] = []
    seen: set[int] = set()
    for _, box in box_chain(context, at):
        for referent in sorted(box.referents, key=lambda r: r.id, reverse=True):
            if referent.id not in seen:
                seen.add(referent.id)
                result.append(referent)
    return result


def undeclared_referents(k: Drs) -> set[int]:
    """
    Ids of referents used in a condition without being accessible where they are used.
    """
    missing: set[int] = set()
    for path, box in iter_boxes(k):
        accessible = {referent.id for referent in accessible_referents(k, path)}
        for condition in box.conditions:
            missing.update(r.id for r in condition.referents if r.id not in accessible)
    return missing


def _referent_depths(k: Drs, depth: int = 0, depths: dict[int, int] = None) -> dict[int, int]:
    depths = {} if depths is None else depths
    for referent in k.referents:
        depths.setdefault(referent.id, depth)
    for condition in k.conditions:
        if isinstance(condition, IfThen):
            _referent_depths(condition.antecedent, depth + 1, depths)
            _referent_depths(condition.consequent, depth + 2, depths)
        else:
            for _, box in getattr(condition, 'boxes', ()):
                _referent_depths(box, depth + 1, depths)
    return depths


def equivalences(k: Drs) -> dict[int, int]:
    """
    Map every referent id to the id of the referent that survives simplification.

    Referents joined by Equality conditions form one class; the survivor is the
    class member declared in the outermost box, the earliest one on ties.
    """
    depths = _referent_depths(k)
    parent: dict[int, int] = {}

    def find(ref_id: int) -> int:
        parent.setdefault(ref_id, ref_id)
        while parent[ref_id] != ref_id:
            parent[ref_id] = parent[parent[ref_id]]
            ref_id = parent[ref_id]
        return ref_id

    def rank(ref_id: int) -> tuple[int, int]:
        return depths.get(ref_id, 0), ref_id

    for ref_id in depths:
        find(ref_id)
    for _, box in iter_boxes(k):
        for condition in box.conditions:
            if isinstance(condition, Equality):
                left, right = find(condition.left.id), find(condition.right.id)
                if left != right:
                    keep, drop = sorted((left, right), key=rank)
                    parent[drop] = keep
    return {ref_id: find(ref_id) for ref_id in parent}


@logged_stage("simplified DRS")
def simplify(k: Drs) -> Drs:
    """
    Remove agreement information and apply equalities.

    Gender, Number and Equality conditions are dropped after every referent is
    replaced by the survivor of its equality class. Conditions repeated within
    one box, or repeated in an antecedent or consequent from a box superordinate
    to it, are dropped.
    """
    mapping_ids = equivalences(k)
    declared = {referent.id: referent for referent in declared_referents(k)}
    mapping = {
        ref_id: declared.get(survivor, Referent(survivor))
        for ref_id, survivor in mapping_ids.items() if ref_id != survivor
    }
    return _simplify_box(k, mapping, frozenset())


def _simplify_box(box: Drs, mapping: dict[int, Referent], inherited: frozenset) -> Drs:
    referents = []
    for referent in box.referents:
        if referent.id not in mapping and referent not in referents:
            referents.append(referent)

    atoms = []
    for condition in box.conditions:
        if isinstance(condition, Atomic):
            atom = condition.substitute(mapping)
            if atom not in inherited and atom not in atoms:
                atoms.append(atom)
    visible = inherited | frozenset(atoms)

    conditions = []
    emitted = set()
    for condition in box.conditions:
        if isinstance(condition, (Gender, Number, Equality)):
            continue
        if isinstance(condition, Atomic):
            atom = condition.substitute(mapping)
            if atom in atoms and atom not in emitted:
                emitted.add(atom)
                conditions.append(atom)
        elif isinstance(condition, IfThen):
            antecedent = _simplify_box(condition.antecedent, mapping, visible)
            consequent = _simplify_box(
                condition.consequent, mapping, visible | frozenset(antecedent.atomic_conditions())
            )
            conditions.append(IfThen(antecedent, consequent))
        elif isinstance(condition, Negation):
            conditions.append(Negation(_simplify_box(condition.drs, mapping, frozenset())))
        elif isinstance(condition, Disjunction):
            conditions.append(Disjunction(
                _simplify_box(condition.left, mapping, frozenset()),
                _simplify_box(condition.right, mapping, frozenset())
            ))
    return Drs(tuple(referents), tuple(conditions))
