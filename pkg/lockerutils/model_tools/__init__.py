from .formulation import Formulation, Variable, Row, Cone, Objective, FractionalTerm
from .formulation import IP_D, IP_A, MICQP, DDC, ADC_PATH
from .build_ip_d  import build_ip_d
from .build_ip_a  import build_ip_a
from .build_micqp import build_micqp
from .export      import export, formulation_from_json, formulation_to_dict
