# DOC: Validation rule builders shared by the commands. Each builder returns a rule  rule(**command_args) -> Invalid-Reason else None

import os

from tardos_distributions.common import names as N
from tardos_distributions.core.distributions import CUTOFF_SCHEDULES


def at_least(arg: str, minimum: int):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. It should be at least {minimum}." \
        if ka[arg] is not None and ka[arg] < minimum else None


def all_at_least(arg: str, minimum: int):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. Every value should be at least {minimum}." \
        if ka[arg] is not None and (len(ka[arg]) == 0 or min(ka[arg]) < minimum) else None


def open_interval(arg: str, low: float, high: float):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. It should lie strictly between {low} and {high}." \
        if ka[arg] is not None and not (low < ka[arg] < high) else None


def known_family(arg: str = 'family'):
    def rule(**ka):
        values = ka[arg] if isinstance(ka[arg], list) else [ka[arg]]
        unknown = [v for v in values if v is not None and str(v).strip().lower() not in N.FAMILY_ALIASES]
        return f"Invalid {arg}: {unknown}. Known families are {sorted(N.FAMILY_ALIASES)}." if unknown else None
    return rule


def discrete_family(arg: str = 'family'):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. Only the discrete families have atoms to tabulate." \
        if ka[arg] is not None and N.FAMILY_ALIASES.get(str(ka[arg]).strip().lower()) == N.ARCSINE else None


def is_continuous(family) -> bool:
    return family is not None and N.FAMILY_ALIASES.get(str(family).strip().lower()) == N.ARCSINE


def cutoff_rules(family_arg: str = 'family'):
    return [
        lambda **ka: f"Invalid cutoff: {ka['cutoff']}. It should lie in [0, 0.5)."
            if ka['cutoff'] is not None and not (0.0 <= ka['cutoff'] < 0.5) else None,
        lambda **ka: f"Invalid cutoff: a cutoff only applies to the continuous arcsine family, not to {ka[family_arg]}."
            if ka['cutoff'] is not None and ka[family_arg] is not None and not is_continuous(ka[family_arg]) else None,
    ]


def known_schedule(arg: str = 'schedule'):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. Known schedules are {list(CUTOFF_SCHEDULES)}." \
        if ka[arg] is not None and ka[arg] not in CUTOFF_SCHEDULES else None


def known_strategy(arg: str = 'strategy'):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. Known strategies are {sorted(N.STRATEGY_ALIASES)}." \
        if ka[arg] is not None and str(ka[arg]).strip().lower() not in N.STRATEGY_ALIASES else None


def existing_file(arg: str):
    return lambda **ka: f"Invalid {arg}: {ka[arg]}. File does not exist." \
        if ka[arg] is not None and not os.path.isfile(ka[arg]) else None


def one_of_required(arg: str, *others: str):
    names = [arg, *others]
    return lambda **ka: f"Missing {' or '.join(names)}: at least one of them is needed." \
        if all(ka[name] is None for name in names) else None
