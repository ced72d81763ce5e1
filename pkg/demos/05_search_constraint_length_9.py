"""Rediscover the two doubly even codes of constraint length 9.

Scans all canonical even-weight tap sequences with K = 9, filters by
gcd and by cheap low-weight witnesses, and fully enumerates the
survivors.  Exactly two codes with d = 12 exist here, with alpha
-2748 and -2820.  Takes a few minutes on two cores.  Run:
python demos/05_search_constraint_length_9.py
"""

import json

from dualcirc import SearchConfig, run_search

report = run_search(SearchConfig("doubly", 9, 9))

print(report.summary())
for record in report.records:
    print(json.dumps(record.to_json_dict()))
