"""Walk through the named example fans and print what each check says about them."""

from toricface import (
    GF, QQ, BoxSpec, canonical_ideal_subfan, cleanness_check, gorenstein_check, is_cohen_macaulay, is_euler_fan,
    shellability_search,
)
from toricface.corpus import named_fans


def describe(fan, box):
    lines = [f"{fan.name}: f-vector {fan.f_vector()}, dim {fan.dim}, {'pure' if fan.pure else 'not pure'}"]
    for field in (QQ, GF(2)):
        cm = is_cohen_macaulay(fan, field)
        if not cm:
            lines.append(f"  over {field}: not Cohen-Macaulay (cone {cm.witness[0]}, degree {cm.witness[1]})")
            continue
        gor = gorenstein_check(fan, field, box)
        canon = canonical_ideal_subfan(fan, field)
        gor_text = f"Gorenstein, sigma={gor.sigma}" if gor else f"not Gorenstein ({gor.reason})"
        lines.append(f"  over {field}: Cohen-Macaulay; {gor_text}; canonical module: {canon.kind}")
    lines.append(f"  Euler fan: {bool(is_euler_fan(fan))}")
    shelling = shellability_search(fan)
    clean = cleanness_check(fan, box)
    lines.append(f"  shellable: {bool(shelling)}; clean: {bool(clean)}"
                 + ("" if clean else f" ({clean.reason})"))
    return "\n".join(lines)


if __name__ == "__main__":
    box = BoxSpec(4)
    for fan in named_fans().values():
        print(describe(fan, box))
        print()
