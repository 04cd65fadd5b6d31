from .bcc import *
from .branches import *
from .constants import *
from .generators import *
from .graph import *
from .kernel import *
from .obstructions import *
from .recognition import *
from .search import *
from .settings import *
from .solver import *
from .trace import *
from .utils import *
