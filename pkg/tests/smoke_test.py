from twobridge_surgery.conway import classify, parse_word
from twobridge_surgery.knotpoly import knot_invariants, word_polynomials
from twobridge_surgery.models import BasicClassSet, TorusClass
from twobridge_surgery.swalgebra import distinguish_tori


def test_smoke():
    print("Smoke test starting...")
    word = parse_word("C(2,2)@plus")
    assert classify(word).to_text() == "5/2"

    report = knot_invariants(word)
    assert report.routes_agree
    assert report.degree == 2

    surgery = distinguish_tori(
        BasicClassSet.singleton((0, 0)),
        TorusClass(vector=(1, 0)),
        [word_polynomials(parse_word("C(3)"))],
    )
    assert surgery.bounds[0].lower_bound == 4

    print("Smoke test passed.")


if __name__ == "__main__":
    test_smoke()
