# basics
import numpy as np

import copy, os, json, hashlib, itertools, logging
from tqdm.auto import tqdm

import warnings, textwrap

from time import time as get_current_seconds


def custom_formatwarning(message, *args, **kwargs):
    return f"🧩🤖 {textwrap.dedent(str(message)).strip()}\n\n"


original_warning_format = warnings.formatwarning


def cheerfully_suggest(*args, **kwargs):
    warnings.formatwarning = custom_formatwarning
    warnings.warn(*args, **kwargs)
    warnings.formatwarning = original_warning_format


# one logger for the whole package (the CLI decides where it goes)
logger = logging.getLogger("slamlearn")

# special functions used by the estimators
from scipy.special import logsumexp, gammaln, expit
from scipy.special import digamma as scipy_digamma

# tables
import pandas as pd
from astropy.table import Table

# graphs (attribute hierarchies)
import networkx as nx

# replicate-level parallelism
from joblib import Parallel, delayed

# the largest K we store in one unsigned 64-bit word
MAXIMUM_K = 64

# the largest K (or J) for which we ever enumerate all 2^K patterns
MAXIMUM_ENUMERATION = 20
