import tensorflow as tf

w = tf.constant(0.0)
n = 0
while n < 5:
    w = tf.add(w, 1.0)
    n += 1
