"""Serpentine walks that avoid one horizontal difference."""

from gwalk import avoiding_walk, build_p1, build_p2
from gwalk.render import render_ascii
from gwalk.walks import contains_forbidden

# P1 zigzags between walls at multiples of d+1 and d-1; P2 shifts the right walls left by one.
for d in (3, 4, 5):
    p1, p2 = build_p1(d), build_p2(d)
    print(f"d={d}: P1 has {len(p1.visited)} points, P2 has {len(p2.visited)} points")
    assert not contains_forbidden(p1, d) and not contains_forbidden(p2, d)

print(render_ascii(build_p1(5)))

# Two axis points of the serpentine, n apart, certify that n does not force d.
cert = avoiding_walk(20, 9)
print(cert.path_id, "anchors", cert.walk[cert.anchor_a], cert.walk[cert.anchor_b])
print(render_ascii(cert.walk, (cert.anchor_a, cert.anchor_b)))

# Only the stretch between the anchors is needed; that keeps large d cheap.
short = avoiding_walk(997, 998, trim=True)
print("n=997, d=998:", len(short.walk), "points between the anchors")
