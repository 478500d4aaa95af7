__author__ = 'max'

import threading
from typing import Callable, List, Optional, Sequence


def parallel_apply(func: Callable, inputs: Sequence, max_threads: Optional[int] = None) -> List:
    r"""Applies :attr:`func` to every element of :attr:`inputs` in worker threads.
    Each element is either a single argument or a tuple of positional arguments.
    Results are returned in input order; if any call raised, the exception of the
    first failing input is re-raised.

    At most :attr:`max_threads` threads run at once (all inputs at once if None).
    """
    lock = threading.Lock()
    results = {}

    def _worker(i, input):
        try:
            # this also avoids accidental unpacking of a single tensor argument
            if not isinstance(input, tuple):
                input = (input,)
            output = func(*input)
            with lock:
                results[i] = output
        except Exception as e:
            with lock:
                results[i] = e

    if len(inputs) > 1:
        step = len(inputs) if max_threads is None else max(max_threads, 1)
        for start in range(0, len(inputs), step):
            threads = [threading.Thread(target=_worker, args=(i, inputs[i]))
                       for i in range(start, min(start + step, len(inputs)))]
            for thread in threads:
                thread.start()
            for thread in threads:
                thread.join()
    elif len(inputs) == 1:
        _worker(0, inputs[0])

    outputs = []
    for i in range(len(inputs)):
        output = results[i]
        if isinstance(output, Exception):
            raise output
        outputs.append(output)
    return outputs
