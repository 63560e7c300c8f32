"""When is every member a finite member plus inf times a finite member?

Module-theoretically: when is every countably generated module built
from the finitely generated ones?  The verdict compares the monoid
against A + inf·A for its finite part A and produces explicit witnesses
when the answer is no.
"""

import json

from supportmonoids import (DioSystem, analyze_single_equation, verdict)

systems = {
    "cusp / conductor square": DioSystem(s=3, F=((1, 1, 0),), G=((1, 0, 1),)),
    "two-ring Bass domain": DioSystem(s=4, F=((1, 1, 1, 0),), G=((1, 1, 0, 1),)),
    "2x = 3y": DioSystem(s=2, F=((2, 0),), G=((0, 3),)),
    "free plane": DioSystem(s=2),
}

for name, sys_ in systems.items():
    rep = verdict(sys_)
    print(f"== {name}")
    print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    print()

print("-- single-equation closed forms ------------------------------")
for a, b in (((1, 1, 0), (1, 0, 1)), ((2, 0), (0, 3)), ((1, 1), (2, 2))):
    rep = analyze_single_equation(a, b)
    print(f"{a} = {b}:", rep.to_json())
