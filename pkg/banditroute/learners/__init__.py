from banditroute.learners.episodic_learner import EpisodicLearner
from banditroute.learners.regret_diagnostics import RegretDiagnostics
from banditroute.learners.rtdp_learner import RTDPLearner
from banditroute.learners.ucb import UCB
from banditroute.learners.value_iteration_ucb_learner import ValueIterationUCBLearner

__all__ = ["EpisodicLearner", "RegretDiagnostics", "RTDPLearner", "UCB", "ValueIterationUCBLearner"]
