__author__ = 'max'

import threading
import pytest

from witten.parallel import parallel_apply


def test_results_keep_input_order():
    assert parallel_apply(lambda x: x * x, list(range(10)), max_threads=3) == [x * x for x in range(10)]


def test_tuple_inputs_are_unpacked():
    assert parallel_apply(lambda a, b: a - b, [(5, 2), (1, 1)]) == [3, 0]


def test_single_and_empty_inputs():
    assert parallel_apply(lambda x: x + 1, [1]) == [2]
    assert parallel_apply(lambda x: x + 1, []) == []


def test_thread_limit():
    lock = threading.Lock()
    active = [0, 0]

    def work(x):
        with lock:
            active[0] += 1
            active[1] = max(active[1], active[0])
        with lock:
            active[0] -= 1
        return x

    parallel_apply(work, list(range(12)), max_threads=2)
    assert active[1] <= 2


def test_first_failure_is_raised():
    def work(x):
        if x >= 3:
            raise ValueError('bad input %d' % x)
        return x

    with pytest.raises(ValueError, match='bad input 3'):
        parallel_apply(work, list(range(6)))
