import tensorflow as tf

step = 0
total = tf.constant(0.0)
while step < 4:
    step += 1
    tf.cast(step, tf.float32)
    tf.reduce_sum(total)
