from semisep.oracle import coinduction_set, induction_fp, induction_set

C2 = [[0, 1], [1, 0]]
TRIV = [[0]]


def test_identity_monoid_map():
    out = induction_set(C2, C2, (0, 1))
    assert out["semiseparable"] and out["separable"] and out["naturally_full"]
    # bimodule endomorphisms of the regular bimodule of a group: multiplication by central elements
    assert out["bimodule_maps"] == 2


def test_group_to_trivial_has_no_witness():
    out = induction_set(C2, TRIV, (0, 0))
    assert out == {"semiseparable": False, "separable": False, "naturally_full": False, "bimodule_maps": 0}


def test_coinduction_by_hand():
    # sections of the surjection 0,1 -> 0 and 2 -> 1
    out = coinduction_set(3, 2, (0, 0, 1))
    assert out["bicomodule_maps"] == 2
    assert out["separable"] and not out["naturally_full"]
    assert coinduction_set(2, 2, (1, 0))["naturally_full"]
    assert coinduction_set(0, 1, ())["bicomodule_maps"] == 0
    assert coinduction_set(0, 0, ())["naturally_full"]


def test_fp_identity_and_augmentation():
    # k[Z/2] over F_3, basis 1, g
    kG = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    k = [[[1]]]
    out = induction_fp(3, kG, kG, [[1, 0], [0, 1]])
    assert out["separable"] and out["naturally_full"]
    aug = induction_fp(3, kG, k, [[1], [1]])
    # E(1) = (1 + g)/2 splits the augmentation as a bimodule map
    assert aug["naturally_full"] and aug["semiseparable"] and not aug["separable"]
    assert induction_fp(2, kG, k, [[1], [1]])["semiseparable"] is False
