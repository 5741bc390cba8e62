import collections

import tensorflow as tf

# `appendleft` is not a recognized mutator, so `history` looks loop-invariant
# and the constant below is reported although its argument changes.
history = collections.deque(maxlen=3)
for step in range(10):
    history.appendleft(step)
    window = tf.constant(list(history))
