#Note: this file holds no magic numbers of any single run, just
# toolkit-wide settings. Per-run values live on SamplingStrategy,
# SimParams, and the cli flags.

import configparser, os

CONF_FILE_PATH = os.environ.get(
    'PBA_CONF',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'pba.ini'))

config = configparser.ConfigParser()
config.read(os.path.expanduser(CONF_FILE_PATH))

SAFETY = config['general'].getboolean('safety')
assert SAFETY is not None

import logging
log = logging.getLogger('constants')

#estimation
DEGENERATE_THRESHOLD = config['estimation'].getfloat('degenerate_threshold')
CONSISTENCY_TOL = config['estimation'].getfloat('consistency_tol')

#sampling
DEFAULT_BATCH_SIZE = config['sampling'].getint('batch_size')
DEFAULT_LABELS_PER_ITER = config['sampling'].getint('labels_per_iter')
DEFAULT_EPSILON = config['sampling'].getfloat('epsilon')
DEFAULT_MAX_ITERS = config['sampling'].getint('max_iters')
POLL_INTERVAL = config['sampling'].getfloat('poll_interval')
POLL_TIMEOUT = config['sampling'].getfloat('poll_timeout')

#theory
DEFAULT_GRID_STEP = config['theory'].getfloat('grid_step')

#cell axes of a JointTable, in storage order
AXES = ('y', 'a', 'y_hat', 'a_hat')

#attribute sources for buildJointTable
TRUE_A, PREDICTED_A, BOTH = 'TrueA', 'PredictedA', 'Both'
ATTRIBUTE_SOURCES = (TRUE_A, PREDICTED_A, BOTH)
