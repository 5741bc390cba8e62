import tensorflow as tf

reward = tf.constant(1.0)
for ep in range(10):
    with tf.Session() as sess:
        sess.run(tf.reduce_sum(reward))  # expect: RNC001
