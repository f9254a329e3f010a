"""
Edits stay local
================

Changing the length of run ``i`` without changing the run symbols only
touches the token at depth ``min(i, r + 1 - i)``.
"""

# %%
from flashback import decompose
from flashback.locality import CharEdit, RunLengthEdit, char_edit_delta_k, diff_tokens, predict_changed_depths

a, b = b"CASSAYFF", b"CASSSAYFF"
edit = RunLengthEdit.between(a, b)
print("changed runs", edit.changed_runs())
print("predicted depths", set(predict_changed_depths(edit)))
print("observed depths", set(diff_tokens(decompose(a), decompose(b))))

# %%
# A single character edit moves the token count by at most one.
for e in (CharEdit("substitute", 2, ord("Z")), CharEdit("insert", 0, ord("Q")), CharEdit("delete", 6)):
    print(e, e.apply(a), char_edit_delta_k(a, e))
