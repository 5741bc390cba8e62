from tensorflow import reduce_mean as mean
import tensorflow as tf

errors = tf.constant([1.0, 2.0])
step = 0
while step < 50:
    step += 1
    m = mean(errors)  # expect: RNC001
