import json as sysjson
from fractions import Fraction
from mvhodge.identities import HodgeValue, ChIntegralResult
from mvhodge.gaussian import GaussianRational
from mvhodge.json_document import JsonDocument, list_from_json, list_to_json, parse_fraction, parse_partition
from mvhodge.laurent_series import LaurentSeries
from mvhodge.mumford import MumfordNormalForm
from mvhodge.partition import Partition
from mvhodge.tau_polynomial import TauPolynomial
from mvhodge.verification import VerificationReport


class BasicTestParent(JsonDocument):
    def __init__(self):
        super().__init__()
        self.str_attr = "Yes"
        self.num_attr = 1
        self.bool_attr = False
        self.list_attr = []
        self.dict_attr = {}
        self.none_attr = None

    def get_attribute_mapping(self) -> dict:
        return {
            "str_attr": "str",
            "num_attr": "num",
            "bool_attr": "bool",
            "list_attr": "list",
            "dict_attr": "dict",
            "none_attr": "none"
        }

    def get_custom_mapping(self) -> dict:
        return {"num_attr": int}


def _round_trip(document: JsonDocument) -> dict:
    return sysjson.loads(sysjson.dumps(document.to_json()))


def test_basic_json():
    tp = BasicTestParent()
    clone = BasicTestParent.from_json(_round_trip(tp))
    assert clone.str_attr == tp.str_attr
    assert clone.num_attr == tp.num_attr
    assert clone.bool_attr == tp.bool_attr
    assert clone.list_attr == tp.list_attr
    assert clone.dict_attr == tp.dict_attr
    assert clone.none_attr == tp.none_attr


class ExactTestParent(BasicTestParent):
    def __init__(self):
        super().__init__()
        self.value_attr = Fraction(0)
        self.mu_attr = Partition()
        self.obj_attr = None

    def get_custom_mapping(self):
        return {
            "num_attr": int,
            "value_attr": parse_fraction,
            "mu_attr": parse_partition,
            "obj_attr": BasicTestParent,
        }

    def get_attribute_mapping(self) -> dict:
        mapping = super().get_attribute_mapping()
        mapping.update({
            "value_attr": "value",
            "mu_attr": "mu",
            "obj_attr": "obj",
        })
        return mapping


def test_exact_values_travel_as_strings():
    etp = ExactTestParent()
    etp.value_attr = Fraction(-31, 967680)
    etp.mu_attr = Partition([1, 3, 1])
    etp.num_attr = 2 ** 80
    payload = etp.to_json()
    assert payload["value"] == "-31/967680"
    assert payload["mu"] == "3,1,1"
    assert payload["num"] == str(2 ** 80)


def test_complex_json():
    etp = ExactTestParent()
    etp.value_attr = Fraction(7, 5760)
    etp.mu_attr = Partition([2, 2, 1])
    etp.obj_attr = BasicTestParent()
    clone = ExactTestParent.from_json(_round_trip(etp))
    # assert basic attributes of instance
    assert clone.str_attr == etp.str_attr
    assert clone.num_attr == etp.num_attr
    assert clone.bool_attr == etp.bool_attr
    assert clone.none_attr == etp.none_attr
    assert clone.value_attr == Fraction(7, 5760)
    assert clone.mu_attr == Partition([2, 2, 1])
    # assert basic json object attributes of child
    assert clone.obj_attr.str_attr == etp.obj_attr.str_attr
    assert clone.obj_attr.num_attr == etp.obj_attr.num_attr


class ListCustomObject(BasicTestParent):
    def get_custom_mapping(self):
        return {
            "list_attr": BasicTestParent,
        }


def test_list_of_json_docs():
    parent = ListCustomObject()
    parent.list_attr.append(BasicTestParent())
    parent.list_attr.append(BasicTestParent())

    clone = ListCustomObject.from_json(_round_trip(parent))
    assert len(clone.list_attr) == 2
    assert clone.list_attr[0].str_attr == parent.list_attr[0].str_attr
    assert clone.list_attr[1].str_attr == parent.list_attr[1].str_attr


class FractionDictObject(BasicTestParent):
    def get_custom_mapping(self):
        return {
            "dict_attr": parse_fraction,
            "list_attr": parse_fraction,
        }


def test_fractions_in_dict():
    do = FractionDictObject()
    do.dict_attr = {"b1": Fraction(1, 24)}
    do.list_attr.append(Fraction(-1, 2))
    do.list_attr.append(Fraction(3))
    clone = FractionDictObject.from_json(_round_trip(do))
    assert clone.dict_attr["b1"] == Fraction(1, 24)
    assert clone.list_attr == [Fraction(-1, 2), Fraction(3)]


def test_hodge_value_list():
    values = [HodgeValue(1, "λ1", Fraction(1, 24), "λ_g conjecture"),
              HodgeValue(2, "λ2·ψ1^2", Fraction(7, 5760), "λ_g conjecture")]
    clones = list_from_json(sysjson.loads(sysjson.dumps(list_to_json(values))), HodgeValue)
    assert [clone.value for clone in clones] == [Fraction(1, 24), Fraction(7, 5760)]
    assert clones[1].g == 2
    assert clones[1].integrand == "λ2·ψ1^2"


def test_ch_integral_result_keys():
    result = ChIntegralResult(3, 1, Fraction(1), Fraction(2), "-1/6·λ1·λ2·λ3", "λ1·λ2·λ3·ψ1^1", Fraction(3))
    payload = result.to_json()
    assert payload["chIntegral"] == "2"
    assert payload["normalForm"] == "-1/6·λ1·λ2·λ3"
    assert ChIntegralResult.from_json(payload).value == Fraction(3)


def test_report_sides_stay_exact():
    lhs = TauPolynomial([Fraction(1, 24), GaussianRational(0, -1)])
    rhs = MumfordNormalForm.of_lambda(1, 2) * MumfordNormalForm.of_lambda(1, 2)
    payload = sysjson.loads(sysjson.dumps(VerificationReport("mumford", {"g": 2}, lhs, rhs, True).to_json()))
    assert payload["lhs"] == ["1/24", {"re": "0", "im": "-1"}]
    assert payload["rhs"] == {"λ2": "2"}
    series = LaurentSeries(-1, [Fraction(1, 2), 0, Fraction(1, 24)], 1)
    assert VerificationReport(lhs=series).to_json()["lhs"] == {
        "minOrder": "-1",
        "maxOrder": "1",
        "coefficients": ["1/2", "0", "1/24"],
    }
