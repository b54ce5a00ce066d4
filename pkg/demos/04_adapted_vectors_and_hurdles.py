"""Adapted-vector scans, hurdle detection, and the splitting conclusions."""

from char2spec import GF4
from char2spec.constructions import b2m, hurdle_template, joint, nt, sl
from char2spec.structure import adapted_scan, detect_hurdle, splitting_check

for label, space in [("nt3", nt(GF4, 3)),
                     ("hurdle_template(4)", hurdle_template(GF4, 4)),
                     ("sl2 v sl2", joint(GF4, sl(GF4, 2), sl(GF4, 2)))]:
    rep = adapted_scan(GF4, space, label=label)
    c = rep.counts()
    print(f"{label:<20} {c['adapted']:>3} adapted / {c['points']} projective points "
          f"({c['weakly_adapted']} weakly adapted)")

print("\nHurdle certificates (first dual plane in scan order):")
for label, space in [("hurdle_template(4)", hurdle_template(GF4, 4)),
                     ("sl2 v sl2", joint(GF4, sl(GF4, 2), sl(GF4, 2))),
                     ("nt3", nt(GF4, 3)),
                     ("b2m(2)", b2m(GF4, 2))]:
    cert = detect_hurdle(GF4, space)
    if cert is None:
        print(f"  {label:<20} not a hurdle")
    else:
        print(f"  {label:<20} plane basis {[list(r) for r in cert.plane.basis]}")

s = joint(GF4, sl(GF4, 2), sl(GF4, 2))
cert = detect_hurdle(GF4, s)
v = splitting_check(GF4, s, cert, mode="2spec")
print(f"\nSplitting conclusions on sl2 v sl2: {v.outcome} "
      f"({v.detail['mode']}, {v.detail['checked']} elements)")
